#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Scalar must be default-constructible to zero, constructible from int, and
// provide +, -, * and an `is_zero` overload visible here or via ADL. Division
// routines additionally need `exact_quotient(a, b)`; for Int it only succeeds
// when the quotient is integral (monic divisors), for fields it is a / b.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "copart/arith.hpp"

namespace copart {

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Int exact_quotient(const Int& a, const Int& b)
{
    if (sgn(b) == 0)
        throw domain_error("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw domain_error("inexact integer division in polynomial arithmetic");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rational exact_quotient(const Rational& a, const Rational& b)
{
    if (sgn(b) == 0)
        throw domain_error("division by zero");
    return Rational(a / b);
}

namespace detail {
template <class Scalar>
bool scalar_is_zero(const Scalar& x)
{
    return is_zero(x);
}
}  // namespace detail

template <class Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Scalar value) { return Polynomial(std::vector<Scalar>{std::move(value)}); }

    static Polynomial monomial(Scalar value, std::size_t degree)
    {
        std::vector<Scalar> c(degree + 1);
        c[degree] = std::move(value);
        return Polynomial(std::move(c));
    }

    /// X - root.
    static Polynomial linear_root(const Scalar& root) { return Polynomial({Scalar(-root), Scalar(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const std::vector<Scalar>& coefficients() const { return c_; }
    const Scalar& leading() const { return c_.back(); }

    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar{}; }

    void set_coeff(std::size_t i, Scalar value)
    {
        if (i >= c_.size())
            c_.resize(i + 1);
        c_[i] = std::move(value);
        trim();
    }

    template <class T>
    T operator()(const T& x) const
    {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    Polynomial& scale(const Scalar& s)
    {
        for (auto& x : c_)
            x *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::scalar_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a.scale(s); }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a.scale(s); }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.c_.size() != b.c_.size())
            return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i]))
                return false;
        return true;
    }

private:
    void trim()
    {
        while (!c_.empty() && detail::scalar_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<Scalar> c_;
};

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned e)
{
    Polynomial<Scalar> r = Polynomial<Scalar>::constant(Scalar(1));
    for (unsigned i = 0; i < e; ++i)
        r *= p;
    return r;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    std::vector<Scalar> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db)
        return {Polynomial<Scalar>{}, a};
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const auto& bc = b.coefficients();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(rem[i]))
            continue;
        Scalar q = exact_quotient(rem[i], bc[db]);
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] -= q * bc[j];
        quot[i - db] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Quotient of an exact division; throws when the remainder is nonzero.
template <class Scalar>
Polynomial<Scalar> divide_exact(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw consistency_error("polynomial division left a nonzero remainder");
    return q;
}

template <class Scalar>
Polynomial<Scalar> make_monic(Polynomial<Scalar> p)
{
    if (p.is_zero())
        return p;
    const Scalar lead = p.leading();
    std::vector<Scalar> c = p.coefficients();
    for (auto& x : c)
        x = exact_quotient(x, lead);
    return Polynomial<Scalar>(std::move(c));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class Scalar>
struct ExtendedGcd {
    Polynomial<Scalar> g, s, t;
};

template <class Scalar>
ExtendedGcd<Scalar> extended_gcd(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b)
{
    using P = Polynomial<Scalar>;
    P r0 = a, r1 = b;
    P s0 = P::constant(Scalar(1)), s1{};
    P t0{}, t1 = P::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        P s2 = s0 - q * s1;
        P t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    const Scalar lead = r0.leading();
    auto unscale = [&](const P& p) {
        std::vector<Scalar> c = p.coefficients();
        for (auto& x : c)
            x = exact_quotient(x, lead);
        return P(std::move(c));
    };
    return {unscale(r0), unscale(s0), unscale(t0)};
}

/// First `count` Taylor coefficients of p around `center`, i.e. the
/// coefficients of t^0..t^{count-1} in p(center + t).
template <class Scalar>
std::vector<Scalar> taylor_coefficients(const Polynomial<Scalar>& p, const Scalar& center, std::size_t count)
{
    // Repeated synthetic division by (X - center).
    std::vector<Scalar> work = p.coefficients();
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (work.empty()) {
            out.emplace_back();
            continue;
        }
        // Horner pass: work becomes the quotient, the remainder is p^{(i)}(center)/i!.
        for (std::size_t j = work.size() - 1; j > 0; --j)
            work[j - 1] += work[j] * center;
        out.push_back(work[0]);
        work.erase(work.begin());
    }
    return out;
}

/// Coefficients t^0..t^{order-1} of num/den as a power series; den(0) must be invertible.
template <class Scalar>
std::vector<Scalar> series_divide(const std::vector<Scalar>& num, const std::vector<Scalar>& den, std::size_t order)
{
    if (den.empty() || is_zero(den[0]))
        throw domain_error("power series division by a series with zero constant term");
    std::vector<Scalar> out(order);
    for (std::size_t n = 0; n < order; ++n) {
        Scalar acc = n < num.size() ? num[n] : Scalar{};
        for (std::size_t i = 1; i <= n && i < den.size(); ++i)
            acc -= den[i] * out[n - i];
        out[n] = exact_quotient(acc, den[0]);
    }
    return out;
}

}  // namespace copart
