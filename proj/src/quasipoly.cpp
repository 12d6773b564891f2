#include "copart/quasipoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "copart/partition.hpp"
#include "copart/totient.hpp"

namespace copart {

namespace {

CycloNum demote(const CycloNum& x)
{
    if (auto r = x.as_rational())
        return CycloNum(*r);
    return x;
}

std::uint64_t coefficient_level(const CycloPolynomial& p)
{
    std::uint64_t level = 1;
    for (const auto& c : p.coefficients())
        level = std::lcm(level, demote(c).level());
    return level;
}

CycloPolynomial demote_all(const CycloPolynomial& p)
{
    std::vector<CycloNum> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients())
        c.push_back(demote(x));
    return CycloPolynomial(std::move(c));
}

// z^{phi(m)} Phi_m(1/z) = prod over primitive m-th roots w of (1 - w z).
CycloPolynomial reversed_cyclotomic(std::uint64_t m)
{
    const auto& phi = cyclotomic_polynomial(m).coefficients();
    std::vector<CycloNum> c;
    c.reserve(phi.size());
    for (auto it = phi.rbegin(); it != phi.rend(); ++it)
        c.emplace_back(*it);
    return CycloPolynomial(std::move(c));
}

// 1 - w z at the given level.
CycloPolynomial linear_factor(const RootOfUnity& w, std::uint64_t level)
{
    return CycloPolynomial({CycloNum(1), -embed(w, level)});
}

void validate_roots(const std::vector<RootSpec>& roots)
{
    if (roots.empty())
        throw domain_error("Binet decomposition needs at least one root");
    std::set<RootOfUnity> seen;
    for (const auto& r : roots) {
        if (r.multiplicity == 0)
            throw domain_error("root multiplicity must be positive");
        if (!seen.insert(r.omega).second)
            throw domain_error("root " + r.omega.to_string() + " listed twice");
    }
}

unsigned total_multiplicity(const std::vector<RootSpec>& roots)
{
    unsigned s = 0;
    for (const auto& r : roots)
        s += r.multiplicity;
    return s;
}

// Level holding the coefficients attached to one root.
std::uint64_t term_level(const RootSpec& root, std::uint64_t base_level)
{
    return std::lcm(root.omega.order(), base_level);
}

// Sums CycloNums grouped by level so that Galois-closed groups collapse to
// rationals before anything is lifted.
class LevelSum {
public:
    void add(const CycloNum& x) { add(x.level(), x); }
    void add(std::uint64_t level, const CycloNum& x)
    {
        auto [it, fresh] = groups_.try_emplace(level, x);
        if (!fresh)
            it->second += x;
    }

    std::optional<Rational> rational() const
    {
        Rational total = 0;
        for (const auto& [level, v] : groups_) {
            auto r = v.as_rational();
            if (!r)
                return std::nullopt;
            total += *r;
        }
        return total;
    }

    CycloNum value() const
    {
        CycloNum total;
        for (const auto& [level, v] : groups_)
            total += demote(v);
        return total;
    }

private:
    std::map<std::uint64_t, CycloNum> groups_;
};

}  // namespace

std::vector<RootSpec> denominator_roots(unsigned k)
{
    if (k < 2)
        throw domain_error("denominator_roots: k must be at least 2");
    std::vector<RootSpec> out;
    for (unsigned m = 1; m <= k; ++m)
        for (std::uint64_t j = 0; j < m; ++j)
            if (std::gcd<std::uint64_t>(j, m) == 1)
                out.push_back({RootOfUnity(m, j), k / m});
    return out;
}

CycloPolynomial denominator_polynomial(const std::vector<RootSpec>& roots)
{
    // Complete sets of primitive m-th roots with a common multiplicity
    // contribute an integer factor; other roots are multiplied in one by one.
    std::map<std::uint64_t, std::vector<const RootSpec*>> by_order;
    for (const auto& r : roots)
        by_order[r.omega.order()].push_back(&r);

    CycloPolynomial p = CycloPolynomial::constant(CycloNum(1));
    for (const auto& [m, group] : by_order) {
        bool full = group.size() == euler_phi(m);
        for (const auto* r : group)
            full = full && r->multiplicity == group.front()->multiplicity;
        if (full) {
            p = p * pow(reversed_cyclotomic(m), group.front()->multiplicity);
        } else {
            for (const auto* r : group)
                p = p * pow(linear_factor(r->omega, m), r->multiplicity);
        }
        p = demote_all(p);
    }
    return p;
}

std::vector<PartialFractionTerm> partial_fractions(const CycloPolynomial& numerator, const std::vector<RootSpec>& roots)
{
    validate_roots(roots);
    const unsigned deg_p = total_multiplicity(roots);
    if (numerator.degree() >= static_cast<int>(deg_p))
        throw domain_error("numerator degree " + std::to_string(numerator.degree()) +
                           " must be below the denominator degree " + std::to_string(deg_p));
    if (numerator.is_zero())
        throw precondition_error("numerator and denominator share every root (numerator is zero)");

    const CycloPolynomial q = demote_all(numerator);
    const CycloPolynomial p = denominator_polynomial(roots);
    const std::uint64_t base = std::lcm(coefficient_level(q), coefficient_level(p));

    std::vector<PartialFractionTerm> out;
    out.reserve(roots.size());
    for (const auto& root : roots) {
        const unsigned b = root.multiplicity;
        const std::uint64_t level = term_level(root, base);
        const CycloNum center = embed(root.omega.conjugate(), level);

        // p = (z - center)^b R(z); the Taylor coefficients of R at center are
        // those of p shifted down by b.
        const auto pt = taylor_coefficients(p, center, 2 * b);
        for (unsigned i = 0; i < b; ++i)
            if (!pt[i].is_zero())
                throw consistency_error("denominator does not vanish to order " + std::to_string(b) + " at " +
                                        root.omega.conjugate().to_string());
        const std::vector<CycloNum> rt(pt.begin() + b, pt.end());
        if (rt[0].is_zero())
            throw consistency_error("denominator vanishes beyond order " + std::to_string(b) + " at " +
                                    root.omega.conjugate().to_string());
        const auto qt = taylor_coefficients(q, center, b);
        if (qt[0].is_zero())
            throw precondition_error("numerator and denominator share the root " + root.omega.conjugate().to_string());
        const auto c = series_divide(qt, rt, b);

        PartialFractionTerm term{root, std::vector<CycloNum>(b), std::vector<CycloNum>(b)};
        const CycloNum minus_w = -embed(root.omega, level);
        CycloNum power(Rational(1), level);
        for (unsigned i = 1; i <= b; ++i) {
            power *= minus_w;
            term.s[i - 1] = c[b - i];
            term.r[i - 1] = power * c[b - i];
        }
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<PartialFractionTerm> partial_fraction(unsigned k)
{
    const auto roots = denominator_roots(k);
    try {
        return partial_fractions(CycloPolynomial::monomial(CycloNum(1), k), roots);
    } catch (const precondition_error& e) {
        throw consistency_error(std::string("partial fractions of the partition generating function: ") + e.what());
    }
}

CycloPolynomial recombine(const std::vector<PartialFractionTerm>& terms, const std::vector<RootSpec>& roots)
{
    const CycloPolynomial p = denominator_polynomial(roots);
    std::map<std::uint64_t, CycloPolynomial> groups;
    for (const auto& term : terms) {
        const unsigned b = term.root.multiplicity;
        const std::uint64_t level = term.r.back().level();
        const CycloPolynomial factor = linear_factor(term.root.omega, level);
        // cofactor_i = p / (1 - w z)^i, built from i = b downwards.
        CycloPolynomial cofactor = divide_exact(p, pow(factor, b));
        CycloPolynomial sum;
        for (unsigned i = b; i >= 1; --i) {
            sum = sum + cofactor * term.r[i - 1];
            cofactor = cofactor * factor;
        }
        auto [it, fresh] = groups.try_emplace(level, sum);
        if (!fresh)
            it->second = it->second + sum;
    }
    CycloPolynomial total;
    for (const auto& [level, poly] : groups)
        total = total + demote_all(poly);
    return demote_all(total);
}

CycloNum BinetTerm::polynomial_at(std::uint64_t n) const
{
    const Rational x(Int(static_cast<unsigned long>(n)));
    CycloNum acc = coeffs.back();
    for (std::size_t t = coeffs.size() - 1; t-- > 0;) {
        acc *= x;
        acc += coeffs[t];
    }
    return acc;
}

CycloNum BinetDecomposition::evaluate(std::uint64_t n) const
{
    LevelSum sum;
    for (const auto& term : terms) {
        const std::uint64_t level = term.coeffs.back().level();
        sum.add(level, term.polynomial_at(n) * embed(term.root.omega.pow(n), level));
    }
    return sum.value();
}

std::optional<Rational> BinetDecomposition::evaluate_rational(std::uint64_t n) const
{
    LevelSum sum;
    for (const auto& term : terms) {
        const std::uint64_t level = term.coeffs.back().level();
        sum.add(level, term.polynomial_at(n) * embed(term.root.omega.pow(n), level));
    }
    if (auto r = sum.rational())
        return r;
    return sum.value().as_rational();
}

BinetDecomposition binet_from_partial_fractions(const std::vector<PartialFractionTerm>& terms)
{
    // binomial(n+i-1, i-1) = C_i(n+i) = sum_t n^t W(i, t) with
    // W(i, t) = sum_{l >= t} a_{i,l} binomial(l, t) i^{l-t}.
    auto weight = [](unsigned i, unsigned t) {
        const auto& cp = composition_polynomial(i);
        Rational w = 0;
        for (unsigned l = t; l < i; ++l)
            w += cp.coefficient(l) * Rational(binomial(l, t) * ipow(i, l - t));
        return w;
    };

    BinetDecomposition d;
    for (const auto& pf : terms) {
        const unsigned b = pf.root.multiplicity;
        const std::uint64_t level = pf.r.back().level();
        BinetTerm term{pf.root, std::vector<CycloNum>(b, CycloNum(Rational(0), level))};
        for (unsigned t = 0; t < b; ++t)
            for (unsigned i = t + 1; i <= b; ++i) {
                CycloNum x = pf.r[i - 1];
                x *= weight(i, t);
                term.coeffs[t] += x;
            }
        if (term.coeffs.back().is_zero())
            throw consistency_error("Binet polynomial at " + pf.root.omega.to_string() + " has degree below " +
                                    std::to_string(b - 1));
        d.level = std::lcm(d.level, level);
        d.terms.push_back(std::move(term));
    }
    return d;
}

std::vector<Polynomial<Rational>> constituents(const BinetDecomposition& d)
{
    std::size_t degree = 0;
    for (const auto& term : d.terms)
        degree = std::max(degree, term.coeffs.size());
    std::vector<Polynomial<Rational>> out;
    out.reserve(d.level);
    for (std::uint64_t r = 0; r < d.level; ++r) {
        std::vector<Rational> coeffs(degree);
        for (std::size_t t = 0; t < degree; ++t) {
            LevelSum sum;
            for (const auto& term : d.terms) {
                if (t >= term.coeffs.size())
                    continue;
                const std::uint64_t level = term.coeffs.back().level();
                sum.add(level, term.coeffs[t] * embed(term.root.omega.pow(r), level));
            }
            auto v = sum.rational();
            if (!v)
                v = sum.value().as_rational();
            if (!v)
                throw consistency_error("quasi-polynomial constituent " + std::to_string(r) + " is not rational");
            coeffs[t] = *v;
        }
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

BinetDecomposition generic_binet(const CycloPolynomial& numerator, const std::vector<RootSpec>& roots)
{
    const auto pf = partial_fractions(numerator, roots);
    const CycloPolynomial back = recombine(pf, roots);
    if (!(back == demote_all(numerator)))
        throw consistency_error("partial fractions do not reconstruct the numerator");
    return binet_from_partial_fractions(pf);
}

BinetDecomposition binet_decompose(unsigned k)
{
    const auto roots = denominator_roots(k);
    const auto pf = partial_fraction(k);
    const CycloPolynomial target = CycloPolynomial::monomial(CycloNum(1), k);
    if (!(recombine(pf, roots) == target))
        throw consistency_error("partial fractions for k = " + std::to_string(k) + " do not reconstruct z^k");

    BinetDecomposition d = binet_from_partial_fractions(pf);
    d.k = k;

    // The constituents are built from the same coefficients as evaluate();
    // checking through them keeps the window cheap for large levels.
    const auto parts = constituents(d);
    const std::uint64_t window = 3 * d.level * k;
    const PartitionTable table(k, window);
    for (std::uint64_t n = 1; n <= window; ++n) {
        const Rational x(Int(static_cast<unsigned long>(n)));
        if (parts[n % d.level](x) != Rational(table.at(k, n)))
            throw consistency_error("Binet form of p_" + std::to_string(k) + " disagrees with the partition count at n = " +
                                    std::to_string(n));
    }
    return d;
}

const BinetDecomposition& cached_binet(unsigned k)
{
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<const BinetDecomposition>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(k); it != cache.end())
            return *it->second;
    }
    auto fresh = std::make_unique<const BinetDecomposition>(binet_decompose(k));
    std::lock_guard lock(mu);
    return *cache.try_emplace(k, std::move(fresh)).first->second;
}

Polynomial<Rational> polynomial_part(unsigned k)
{
    const auto& d = cached_binet(k);
    std::vector<Rational> c;
    for (const auto& u : d.terms.front().coeffs) {
        auto r = u.as_rational();
        if (!r)
            throw consistency_error("polynomial part has a non-rational coefficient");
        c.push_back(*r);
    }
    return Polynomial<Rational>(std::move(c));
}

Int quasi_period(unsigned k)
{
    if (k < 2)
        throw domain_error("quasi_period: k must be at least 2");
    return lcm_delta(k);
}

unsigned quasi_degree_remainder(unsigned k)
{
    const auto& d = cached_binet(k);
    const unsigned expected = k / 2 - 1;
    const auto& term = d.terms.at(1);
    if (term.root.omega != RootOfUnity::minus_one() || term.coeffs.size() - 1 != expected)
        throw consistency_error("term at -1 does not have degree floor(k/2) - 1");
    return expected;
}

CoprimeCombination coprime_combination(const BinetDecomposition& d)
{
    CoprimeCombination c;
    c.k = d.k;
    for (const auto& term : d.terms)
        for (unsigned t = 0; t < term.coeffs.size(); ++t)
            c.entries.push_back({t, term.root.omega, term.coeffs[t]});
    return c;
}

CoprimeCombination coprime_combination(unsigned k) { return coprime_combination(cached_binet(k)); }

Int evaluate_combination(const CoprimeCombination& c, std::uint64_t n)
{
    if (n == 0)
        throw domain_error("evaluate_combination: n must be positive");
    LevelSum sum;
    for (const auto& e : c.entries) {
        if (e.coeff.is_zero())
            continue;
        sum.add(e.coeff * jordan_root_totient(e.degree, e.omega, n));
    }
    auto v = sum.rational();
    if (!v)
        v = sum.value().as_rational();
    if (!v)
        throw consistency_error("coprime combination is not rational at n = " + std::to_string(n));
    if (v->get_den() != 1 || sgn(*v) < 0)
        throw consistency_error("coprime combination is not a non-negative integer at n = " + std::to_string(n) +
                                " (got " + v->get_str() + ")");
    return v->get_num();
}

}  // namespace copart
