#pragma once

// Exact integers and rationals plus the classical arithmetic functions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace copart {

using Int = mpz_class;
using Rational = mpq_class;

// Errors. The CLI maps all of these to exit code 1.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Smallest-prime-factor table for [0, bound). Immutable after construction.
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t bound);

    std::uint32_t bound() const { return static_cast<std::uint32_t>(spf_.size()); }
    /// Requires 2 <= n < bound().
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }

    /// Process-wide sieve with bound 10^6, built on first use.
    static const SpfSieve& shared();

private:
    std::vector<std::uint32_t> spf_;
};

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);
Factorization factorize(std::uint64_t n, const SpfSieve& sieve);

/// Sorted ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
unsigned big_omega(std::uint64_t n);
unsigned small_omega(std::uint64_t n);

/// lcm(1, 2, ..., n).
Int lcm_delta(std::uint64_t n);

/// Signed Stirling number of the first kind: coefficient of X^i in X(X-1)...(X-k+1).
Int stirling_first(unsigned k, unsigned i);

/// Zero when r > n.
Int binomial(std::uint64_t n, std::uint64_t r);
Int factorial(unsigned n);
Int ipow(std::uint64_t base, unsigned exponent);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Int& z);
/// Accepts "a" or "a/b"; the result is canonicalized.
Rational parse_rational(const std::string& text);

}  // namespace copart
