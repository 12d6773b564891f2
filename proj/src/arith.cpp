#include "copart/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "copart/polynomial.hpp"

namespace copart {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s)
{
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n)
{
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n)
            return d;
    }
}

void factor_into(std::uint64_t n, const SpfSieve& sieve, std::map<std::uint64_t, unsigned>& out)
{
    if (n == 1)
        return;
    if (n < sieve.bound()) {
        auto m = static_cast<std::uint32_t>(n);
        while (m > 1) {
            std::uint32_t p = sieve.smallest_factor(m);
            while (m % p == 0) {
                m /= p;
                ++out[p];
            }
        }
        return;
    }
    // Strip small primes by trial division before falling back to rho.
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        while (n % p == 0) {
            n /= p;
            ++out[p];
        }
    }
    if (n == 1)
        return;
    if (n < sieve.bound()) {
        factor_into(n, sieve, out);
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, sieve, out);
    factor_into(n / d, sieve, out);
}

}  // namespace

SpfSieve::SpfSieve(std::uint32_t bound) : spf_(std::max<std::uint32_t>(bound, 2), 0)
{
    const std::uint32_t b = this->bound();
    for (std::uint32_t i = 2; i < b; ++i) {
        if (spf_[i] != 0)
            continue;
        for (std::uint64_t j = i; j < b; j += i)
            if (spf_[j] == 0)
                spf_[j] = i;
    }
}

const SpfSieve& SpfSieve::shared()
{
    static const SpfSieve sieve(1'000'000);
    return sieve;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic below 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, s))
            return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) { return factorize(n, SpfSieve::shared()); }

Factorization factorize(std::uint64_t n, const SpfSieve& sieve)
{
    if (n == 0)
        throw domain_error("factorize: n must be positive");
    std::map<std::uint64_t, unsigned> acc;
    factor_into(n, sieve, acc);
    Factorization f;
    f.reserve(acc.size());
    for (auto [p, e] : acc)
        f.push_back({p, e});
    return f;
}

std::vector<std::uint64_t> divisors(const Factorization& f)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t t = 0; t < base; ++t)
                out.push_back(out[t] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

int mobius(std::uint64_t n)
{
    const auto f = factorize(n);
    for (const auto& pe : f)
        if (pe.exponent > 1)
            return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t r = 1;
    for (const auto& [p, e] : factorize(n)) {
        r *= p - 1;
        for (unsigned i = 1; i < e; ++i)
            r *= p;
    }
    return r;
}

unsigned big_omega(std::uint64_t n)
{
    unsigned r = 0;
    for (const auto& pe : factorize(n))
        r += pe.exponent;
    return r;
}

unsigned small_omega(std::uint64_t n) { return static_cast<unsigned>(factorize(n).size()); }

Int lcm_delta(std::uint64_t n)
{
    if (n == 0)
        throw domain_error("lcm_delta: n must be positive");
    Int acc = 1;
    for (std::uint64_t m = 2; m <= n; ++m) {
        Int mm(static_cast<unsigned long>(m));
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), mm.get_mpz_t());
    }
    return acc;
}

Int stirling_first(unsigned k, unsigned i)
{
    if (k == 0)
        throw domain_error("stirling_first: k must be positive");
    if (i == 0 || i > k)
        throw domain_error("stirling_first: index must satisfy 1 <= i <= k");

    static std::mutex mu;
    static std::map<unsigned, Polynomial<Int>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
        // X (X - 1) ... (X - k + 1)
        Polynomial<Int> p = Polynomial<Int>::constant(Int(1));
        for (unsigned r = 0; r < k; ++r)
            p *= Polynomial<Int>::linear_root(Int(r));
        it = cache.emplace(k, std::move(p)).first;
    }
    return it->second.coeff(i);
}

Int binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n)
        return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

Int factorial(unsigned n)
{
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int ipow(std::uint64_t base, unsigned exponent)
{
    Int out;
    Int b(static_cast<unsigned long>(base));
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
    return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}
std::string to_string(const Int& z) { return z.get_str(); }

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw domain_error("not a rational number: '" + text + "'");
    if (sgn(r.get_den()) == 0)
        throw domain_error("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace copart
