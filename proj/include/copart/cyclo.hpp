#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_L).
//
// Elements are stored in the canonical basis 1, zeta_L, ..., zeta_L^{phi(L)-1}
// reduced modulo the cyclotomic polynomial Phi_L, so two elements of the same
// level are equal exactly when their coefficient vectors are. Binary operations
// on different levels lift both operands to the lcm of the levels.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copart/arith.hpp"
#include "copart/polynomial.hpp"

namespace copart {

/// e^{2 pi i j / m}, stored with gcd(j, m) = 1; the value 1 is (1, 0).
class RootOfUnity {
public:
    RootOfUnity() = default;
    /// Any exponent is accepted and reduced to the canonical token.
    RootOfUnity(std::uint64_t order, std::uint64_t exponent);

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {2, 1}; }
    /// e^{2 pi i / m}.
    static RootOfUnity principal(std::uint64_t m) { return {m, 1}; }

    std::uint64_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }

    RootOfUnity pow(std::uint64_t e) const;
    RootOfUnity conjugate() const { return {order_, order_ - exponent_}; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend std::strong_ordering operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

    /// "m/j".
    std::string to_string() const;
    /// Parses "m/j" (canonicalizing); throws domain_error on malformed input.
    static RootOfUnity parse(const std::string& text);

private:
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 0;
};

/// Phi_d, cached for the lifetime of the process.
const Polynomial<Int>& cyclotomic_polynomial(std::uint64_t d);

namespace detail {
struct LevelData;
}

class CycloNum {
public:
    /// Zero at level 1.
    CycloNum();
    CycloNum(long value);
    CycloNum(const Int& value);
    CycloNum(const Rational& value, std::uint64_t level = 1);

    /// Takes phi(level) coefficients in the canonical basis.
    static CycloNum from_coefficients(std::uint64_t level, std::vector<Rational> coeffs);
    /// zeta_level^e for any e.
    static CycloNum zeta_power(std::uint64_t level, std::uint64_t e);

    std::uint64_t level() const;
    /// phi(level).
    std::size_t dimension() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    /// Same value at a multiple of the current level.
    CycloNum lifted(std::uint64_t level) const;

    CycloNum conjugate() const;
    /// Throws domain_error on zero.
    CycloNum inverse() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }
    CycloNum& operator*=(const Rational& r);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

    /// Value equality; operands on different levels are compared at the lcm.
    friend bool operator==(const CycloNum& a, const CycloNum& b);

    /// "[c0, c1, ...]@level".
    std::string to_string() const;
    /// Rational values print as "a" or "a/b", others as to_string().
    std::string to_display_string() const;

private:
    CycloNum(const detail::LevelData* lvl, std::vector<Rational> coeffs);

    const detail::LevelData* lvl_;
    std::vector<Rational> coeffs_;
};

/// ζ_L^{jL/m} reduced modulo Phi_L. Throws domain_error unless order(w) | level.
CycloNum embed(const RootOfUnity& w, std::uint64_t level);
/// Embeds at level order(w).
CycloNum embed(const RootOfUnity& w);

inline std::optional<Rational> is_rational(const CycloNum& a) { return a.as_rational(); }
inline CycloNum conjugate(const CycloNum& a) { return a.conjugate(); }
inline CycloNum inverse(const CycloNum& a) { return a.inverse(); }
inline bool is_zero(const CycloNum& a) { return a.is_zero(); }
inline CycloNum exact_quotient(const CycloNum& a, const CycloNum& b) { return a / b; }

using CycloPolynomial = Polynomial<CycloNum>;

/// Integer linear combination of powers of zeta_L, reduced once on demand.
/// Cheaper than summing CycloNums when many roots of unity are accumulated.
class CycloAccumulator {
public:
    explicit CycloAccumulator(std::uint64_t level);

    void add(std::uint64_t exponent, const Int& c) { by_exponent_[exponent % by_exponent_.size()] += c; }
    void add(std::uint64_t exponent, long c) { by_exponent_[exponent % by_exponent_.size()] += c; }
    void add(const RootOfUnity& w, const Int& c);

    CycloNum value() const;

private:
    std::vector<Int> by_exponent_;
};

}  // namespace copart
