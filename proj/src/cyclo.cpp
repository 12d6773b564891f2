#include "copart/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace copart {

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity::RootOfUnity(std::uint64_t order, std::uint64_t exponent)
{
    if (order == 0)
        throw domain_error("root of unity: order must be positive");
    exponent %= order;
    const std::uint64_t g = std::gcd(exponent, order);  // gcd(0, m) = m
    order_ = order / g;
    exponent_ = exponent / g;
    if (order_ == 1)
        exponent_ = 0;
}

RootOfUnity RootOfUnity::pow(std::uint64_t e) const
{
    const auto r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(exponent_) * (e % order_) % order_);
    return {order_, r};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b)
{
    const std::uint64_t m = std::lcm(a.order_, b.order_);
    return {m, (a.exponent_ * (m / a.order_) + b.exponent_ * (m / b.order_)) % m};
}

std::string RootOfUnity::to_string() const { return std::to_string(order_) + "/" + std::to_string(exponent_); }

RootOfUnity RootOfUnity::parse(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw domain_error("root of unity must be written m/j, got '" + text + "'");
    try {
        std::size_t used = 0;
        const auto m = std::stoull(text.substr(0, slash), &used);
        if (used != slash)
            throw std::invalid_argument("m");
        const auto rest = text.substr(slash + 1);
        const auto j = std::stoull(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("j");
        if (m == 0)
            throw domain_error("root of unity: order must be positive");
        return {m, j};
    } catch (const std::logic_error&) {
        throw domain_error("root of unity must be written m/j, got '" + text + "'");
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

const Polynomial<Int>& cyclotomic_polynomial(std::uint64_t d)
{
    if (d == 0)
        throw domain_error("cyclotomic_polynomial: d must be positive");
    static std::mutex mu;
    static std::map<std::uint64_t, Polynomial<Int>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(d); it != cache.end())
            return it->second;
    }
    // Phi_d = (X^d - 1) / prod_{e | d, e < d} Phi_e
    Polynomial<Int> num = Polynomial<Int>::monomial(Int(1), d) - Polynomial<Int>::constant(Int(1));
    Polynomial<Int> den = Polynomial<Int>::constant(Int(1));
    for (std::uint64_t e : divisors(d))
        if (e < d)
            den *= cyclotomic_polynomial(e);
    Polynomial<Int> phi = divide_exact(num, den);
    std::lock_guard lock(mu);
    return cache.emplace(d, std::move(phi)).first->second;
}

// ---------------------------------------------------------------------------
// Per-level data

namespace detail {

struct LevelData {
    std::uint64_t level;
    std::size_t dim;
    // powers[e] = coefficients of X^e mod Phi_L, e in [0, L).
    std::vector<std::vector<long>> powers;
    Polynomial<Rational> modulus;
};

namespace {

std::unique_ptr<LevelData> build_level(std::uint64_t L)
{
    const auto& phi = cyclotomic_polynomial(L);
    auto out = std::make_unique<LevelData>();
    out->level = L;
    out->dim = static_cast<std::size_t>(phi.degree());
    std::vector<Rational> mc;
    for (const auto& c : phi.coefficients())
        mc.emplace_back(c);
    out->modulus = Polynomial<Rational>(std::move(mc));

    const std::size_t dim = out->dim;
    std::vector<Int> cur(dim);
    cur[0] = 1;
    out->powers.reserve(L);
    for (std::uint64_t e = 0; e < L; ++e) {
        std::vector<long> row(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!cur[i].fits_slong_p())
                throw resource_error("cyclotomic power table exceeds machine integers");
            row[i] = cur[i].get_si();
        }
        out->powers.push_back(std::move(row));
        // multiply by X and reduce with X^dim = -sum_{i<dim} phi_i X^i
        Int top = cur[dim - 1];
        for (std::size_t i = dim - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (sgn(top) != 0)
            for (std::size_t i = 0; i < dim; ++i)
                cur[i] -= top * phi.coefficients()[i];
    }
    return out;
}

}  // namespace

const LevelData& level_data(std::uint64_t L)
{
    if (L == 0)
        throw domain_error("cyclotomic level must be positive");
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<LevelData>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(L); it != cache.end())
            return *it->second;
    }
    auto built = build_level(L);
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(L, std::move(built));
    return *it->second;
}

}  // namespace detail

namespace {

const detail::LevelData* level_one()
{
    static const detail::LevelData* one = &detail::level_data(1);
    return one;
}

// coeffs indexed by exponent e in [0, L) (not reduced) -> canonical basis.
std::vector<Rational> reduce_group_ring(const detail::LevelData& lvl, const std::vector<Rational>& by_exponent)
{
    std::vector<Rational> out(lvl.dim);
    for (std::size_t e = 0; e < by_exponent.size(); ++e) {
        if (sgn(by_exponent[e]) == 0)
            continue;
        const auto& row = lvl.powers[e % lvl.level];
        for (std::size_t i = 0; i < lvl.dim; ++i)
            if (row[i] != 0)
                out[i] += by_exponent[e] * row[i];
    }
    return out;
}

bool only_constant(const std::vector<Rational>& c)
{
    for (std::size_t i = 1; i < c.size(); ++i)
        if (sgn(c[i]) != 0)
            return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycloNum

CycloNum::CycloNum() : lvl_(level_one()), coeffs_(1) {}
CycloNum::CycloNum(long value) : lvl_(level_one()), coeffs_{Rational(value)} {}
CycloNum::CycloNum(const Int& value) : lvl_(level_one()), coeffs_{Rational(value)} {}

CycloNum::CycloNum(const Rational& value, std::uint64_t level) : lvl_(&detail::level_data(level)), coeffs_(lvl_->dim)
{
    coeffs_[0] = value;
}

CycloNum::CycloNum(const detail::LevelData* lvl, std::vector<Rational> coeffs) : lvl_(lvl), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::from_coefficients(std::uint64_t level, std::vector<Rational> coeffs)
{
    const auto* lvl = &detail::level_data(level);
    if (coeffs.size() != lvl->dim)
        throw domain_error("cyclotomic element at level " + std::to_string(level) + " needs " +
                           std::to_string(lvl->dim) + " coefficients, got " + std::to_string(coeffs.size()));
    for (auto& c : coeffs)
        c.canonicalize();
    return {lvl, std::move(coeffs)};
}

CycloNum CycloNum::zeta_power(std::uint64_t level, std::uint64_t e)
{
    const auto* lvl = &detail::level_data(level);
    const auto& row = lvl->powers[e % level];
    std::vector<Rational> c(lvl->dim);
    for (std::size_t i = 0; i < lvl->dim; ++i)
        c[i] = row[i];
    return {lvl, std::move(c)};
}

std::uint64_t CycloNum::level() const { return lvl_->level; }

bool CycloNum::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

std::optional<Rational> CycloNum::as_rational() const
{
    if (!only_constant(coeffs_))
        return std::nullopt;
    return coeffs_[0];
}

CycloNum CycloNum::lifted(std::uint64_t level) const
{
    if (level == lvl_->level)
        return *this;
    if (level % lvl_->level != 0)
        throw domain_error("cannot lift level " + std::to_string(lvl_->level) + " to level " + std::to_string(level));
    const auto* target = &detail::level_data(level);
    const std::uint64_t step = level / lvl_->level;
    std::vector<Rational> out(target->dim);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0)
            continue;
        const auto& row = target->powers[(i * step) % level];
        for (std::size_t t = 0; t < target->dim; ++t)
            if (row[t] != 0)
                out[t] += coeffs_[i] * row[t];
    }
    return {target, std::move(out)};
}

CycloNum CycloNum::conjugate() const
{
    const std::uint64_t L = lvl_->level;
    std::vector<Rational> by_exp(L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        by_exp[(L - i) % L] = coeffs_[i];
    return {lvl_, reduce_group_ring(*lvl_, by_exp)};
}

CycloNum CycloNum::inverse() const
{
    if (is_zero())
        throw domain_error("inverse of zero in a cyclotomic field");
    if (only_constant(coeffs_)) {
        std::vector<Rational> c(lvl_->dim);
        c[0] = 1 / coeffs_[0];
        return {lvl_, std::move(c)};
    }
    Polynomial<Rational> a{std::vector<Rational>(coeffs_)};
    auto eg = extended_gcd(a, lvl_->modulus);
    if (eg.g.degree() != 0)
        throw consistency_error("cyclotomic inverse: representative not coprime to the modulus");
    std::vector<Rational> c(lvl_->dim);
    const auto s = divmod(eg.s, lvl_->modulus).second;
    for (int i = 0; i <= s.degree(); ++i)
        c[i] = s.coefficients()[i];
    return {lvl_, std::move(c)};
}

CycloNum CycloNum::operator-() const
{
    CycloNum r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o)
{
    if (lvl_ != o.lvl_) {
        if (only_constant(o.coeffs_)) {
            coeffs_[0] += o.coeffs_[0];
            return *this;
        }
        if (only_constant(coeffs_)) {
            Rational c = coeffs_[0];
            *this = o;
            coeffs_[0] += c;
            return *this;
        }
        const std::uint64_t L = std::lcm(lvl_->level, o.lvl_->level);
        if (lvl_->level != L)
            *this = lifted(L);
        if (o.lvl_->level != L)
            return *this += o.lifted(L);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const Rational& r)
{
    for (auto& c : coeffs_)
        c *= r;
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o)
{
    *this = *this * o;
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b)
{
    if (a.lvl_ != b.lvl_) {
        // A rational factor never forces a lift of the other operand.
        if (only_constant(b.coeffs_) && a.lvl_->level % b.lvl_->level == 0) {
            CycloNum r = a;
            return r *= b.coeffs_[0];
        }
        if (only_constant(a.coeffs_) && b.lvl_->level % a.lvl_->level == 0) {
            CycloNum r = b;
            return r *= a.coeffs_[0];
        }
        const std::uint64_t L = std::lcm(a.lvl_->level, b.lvl_->level);
        return a.lifted(L) * b.lifted(L);
    }
    if (only_constant(b.coeffs_)) {
        CycloNum r = a;
        return r *= b.coeffs_[0];
    }
    if (only_constant(a.coeffs_)) {
        CycloNum r = b;
        return r *= a.coeffs_[0];
    }
    const std::size_t dim = a.coeffs_.size();
    std::vector<Rational> prod(2 * dim - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (sgn(b.coeffs_[j]) != 0)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return {a.lvl_, reduce_group_ring(*a.lvl_, prod)};
}

bool operator==(const CycloNum& a, const CycloNum& b)
{
    if (a.lvl_ == b.lvl_)
        return a.coeffs_ == b.coeffs_;
    const bool ra = only_constant(a.coeffs_);
    const bool rb = only_constant(b.coeffs_);
    if (ra && rb)
        return a.coeffs_[0] == b.coeffs_[0];
    const std::uint64_t L = std::lcm(a.lvl_->level, b.lvl_->level);
    return a.lifted(L).coeffs_ == b.lifted(L).coeffs_;
}

std::string CycloNum::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            os << ", ";
        os << coeffs_[i].get_str();
    }
    os << "]@" << lvl_->level;
    return os.str();
}

std::string CycloNum::to_display_string() const
{
    if (auto r = as_rational())
        return r->get_str();
    return to_string();
}

CycloNum embed(const RootOfUnity& w, std::uint64_t level)
{
    if (level == 0 || level % w.order() != 0)
        throw domain_error("embed: order " + std::to_string(w.order()) + " does not divide level " +
                           std::to_string(level));
    return CycloNum::zeta_power(level, w.exponent() * (level / w.order()));
}

CycloNum embed(const RootOfUnity& w) { return embed(w, w.order()); }

// ---------------------------------------------------------------------------
// CycloAccumulator

CycloAccumulator::CycloAccumulator(std::uint64_t level) : by_exponent_(level)
{
    if (level == 0)
        throw domain_error("cyclotomic level must be positive");
}

void CycloAccumulator::add(const RootOfUnity& w, const Int& c)
{
    const std::uint64_t L = by_exponent_.size();
    if (L % w.order() != 0)
        throw domain_error("accumulator level is not a multiple of the root order");
    by_exponent_[w.exponent() * (L / w.order())] += c;
}

CycloNum CycloAccumulator::value() const
{
    const std::uint64_t L = by_exponent_.size();
    const auto& lvl = detail::level_data(L);
    std::vector<Int> acc(lvl.dim);
    for (std::uint64_t e = 0; e < L; ++e) {
        if (sgn(by_exponent_[e]) == 0)
            continue;
        const auto& row = lvl.powers[e];
        for (std::size_t i = 0; i < lvl.dim; ++i)
            if (row[i] != 0)
                acc[i] += by_exponent_[e] * row[i];
    }
    std::vector<Rational> c(lvl.dim);
    for (std::size_t i = 0; i < lvl.dim; ++i)
        c[i] = acc[i];
    return CycloNum::from_coefficients(L, std::move(c));
}

}  // namespace copart
