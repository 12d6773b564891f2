#pragma once

// Binet form of sequences with rational generating functions whose poles are
// roots of unity, specialized to
//
//   sum_n p_k(n) z^n = z^k / prod_{m=1}^{k} (1 - z^m)
//
// which gives p_k(n) = sum_j P_j(n) w_j^n and, through Mobius inversion,
// p'_k(n) = sum_j sum_t u_{jt} J_(t, w_j)(n).
//
// Coefficients attached to a root w are elements of Q(zeta_m), m = order(w)
// (or of a larger field when the numerator needs one), and are stored at that
// native level; the decomposition level is the lcm of those levels, which is
// delta(k) for the partition generating function.

#include <cstdint>
#include <optional>
#include <vector>

#include "copart/arith.hpp"
#include "copart/cyclo.hpp"
#include "copart/polynomial.hpp"

namespace copart {

struct RootSpec {
    RootOfUnity omega;
    unsigned multiplicity = 1;

    friend bool operator==(const RootSpec&, const RootSpec&) = default;
};

/// Primitive m-th roots for m = 1..k with multiplicity floor(k/m), ordered by
/// m and then by exponent. Requires k >= 2.
std::vector<RootSpec> denominator_roots(unsigned k);

/// Pole data for one root w: the generating function contains
///   sum_i s[i-1] / (z - w^{-1})^i  =  sum_i r[i-1] / (1 - w z)^i.
struct PartialFractionTerm {
    RootSpec root;
    std::vector<CycloNum> s;
    std::vector<CycloNum> r;
};

/// Partial fractions of Q(z) / prod_j (1 - w_j z)^{b_j}. Requires deg Q below
/// the denominator degree and no common root; checks every pole order.
std::vector<PartialFractionTerm> partial_fractions(const CycloPolynomial& numerator,
                                                   const std::vector<RootSpec>& roots);
/// Partial fractions of the generating function of p_k.
std::vector<PartialFractionTerm> partial_fraction(unsigned k);

/// prod_j (1 - w_j z)^{b_j}.
CycloPolynomial denominator_polynomial(const std::vector<RootSpec>& roots);

/// Sum of the partial fraction terms over the common denominator, i.e. the
/// numerator they reconstruct.
CycloPolynomial recombine(const std::vector<PartialFractionTerm>& terms, const std::vector<RootSpec>& roots);

struct BinetTerm {
    RootSpec root;
    /// u_{j,0..b-1}: P_j(n) = sum_t coeffs[t] n^t.
    std::vector<CycloNum> coeffs;

    CycloNum polynomial_at(std::uint64_t n) const;
};

struct BinetDecomposition {
    /// Degree parameter of the partition generating function; 0 for generic input.
    unsigned k = 0;
    std::uint64_t level = 1;
    std::vector<BinetTerm> terms;

    /// sum_j P_j(n) w_j^n.
    CycloNum evaluate(std::uint64_t n) const;
    /// evaluate(n) when it is rational. Conjugate-closed decompositions always
    /// take this path without lifting to the full level.
    std::optional<Rational> evaluate_rational(std::uint64_t n) const;
};

/// Quasi-polynomial form: element r is the polynomial Q_r with
/// evaluate(n) = Q_r(n) for every n = r (mod d.level). Throws
/// consistency_error when a constituent is not rational.
std::vector<Polynomial<Rational>> constituents(const BinetDecomposition& d);

/// u_{jt} from the pole data: expands 1/(1 - w z)^i = sum_n binomial(n+i-1, i-1) w^n z^n.
BinetDecomposition binet_from_partial_fractions(const std::vector<PartialFractionTerm>& terms);

/// Binet form of Q(z) / prod_j (1 - w_j z)^{b_j}, valid for n >= 0.
/// deg Q >= deg of the denominator throws domain_error; a shared root throws
/// precondition_error.
BinetDecomposition generic_binet(const CycloPolynomial& numerator, const std::vector<RootSpec>& roots);

/// Decomposition of p_k, self-checked against partitions_count on
/// n in [1, 3 delta(k) k]; a mismatch throws consistency_error.
BinetDecomposition binet_decompose(unsigned k);

/// Shared, immutable decompositions keyed by k.
const BinetDecomposition& cached_binet(unsigned k);

/// P_1, the term at w = 1.
Polynomial<Rational> polynomial_part(unsigned k);
/// delta(k).
Int quasi_period(unsigned k);
/// floor(k/2) - 1, checked against the degree of the term at w = -1.
unsigned quasi_degree_remainder(unsigned k);

struct CombinationEntry {
    unsigned degree = 0;
    RootOfUnity omega;
    CycloNum coeff;
};

struct CoprimeCombination {
    unsigned k = 0;
    std::vector<CombinationEntry> entries;
};

/// Entries (t, w_j, u_{jt}) of the decomposition, in root order then degree.
CoprimeCombination coprime_combination(unsigned k);
CoprimeCombination coprime_combination(const BinetDecomposition& d);

/// sum u_{jt} J_(t, w_j)(n); throws consistency_error unless the value is a
/// non-negative integer.
Int evaluate_combination(const CoprimeCombination& c, std::uint64_t n);

}  // namespace copart
