#pragma once

// Jordan totient J_k and its generalizations:
//   modulo totient   J_k^{j,m}(n) = sum_{d | n, d = j (mod m)} d^k mu(n/d)
//   root totient     J_(k,w)(n)   = sum_{d | n} w^d d^k mu(n/d)
//   Dirichlet totient J_k(chi; n) = sum_{d | n} chi(d) d^k mu(n/d)
//
// Each family has a divisor-sum evaluation (the `*_by_divisors` functions or
// the definition itself) and at least one independent route through product
// formulas, characters, or closed forms.

#include <cstdint>
#include <optional>
#include <vector>

#include "copart/arith.hpp"
#include "copart/cyclo.hpp"

namespace copart {

Int jordan_totient(unsigned k, std::uint64_t n);
Int jordan_totient_by_divisors(unsigned k, std::uint64_t n);

/// Requires j < m.
Int jordan_mod_totient(unsigned k, std::uint64_t j, std::uint64_t m, std::uint64_t n);

/// Value at level w.order().
CycloNum jordan_root_totient(unsigned k, const RootOfUnity& w, std::uint64_t n);

/// sum_{j < m} w^j J_k^{j,m}(n) with m = w.order().
CycloNum split_root_into_modulo(unsigned k, const RootOfUnity& w, std::uint64_t n);

/// nullopt is the value 0 (argument not a unit); otherwise a root of unity.
using CharacterValue = std::optional<RootOfUnity>;

class DirichletCharacter {
public:
    DirichletCharacter(std::uint64_t modulus, std::vector<CharacterValue> table);

    std::uint64_t modulus() const { return modulus_; }
    const CharacterValue& operator()(std::uint64_t r) const { return table_[r % modulus_]; }
    const std::vector<CharacterValue>& table() const { return table_; }

    /// Smallest L such that every value lies in U_L.
    std::uint64_t value_level() const { return level_; }
    bool is_principal() const;
    DirichletCharacter conjugate() const;

    friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

private:
    std::uint64_t modulus_;
    std::vector<CharacterValue> table_;
    std::uint64_t level_;
};

/// Value of a character as a field element (0 for non-units) at the given level.
CycloNum character_value(const CharacterValue& v, std::uint64_t level);

/// All phi(m) characters mod m: principal first, then lexicographic in the
/// exponent tuples over the generators of (Z/mZ)^*. Generators are taken per
/// prime power in increasing prime order, using {-1, 5} for 2^a with a >= 3.
/// Throws resource_error for m > 4096.
const std::vector<DirichletCharacter>& enumerate_characters(std::uint64_t m);

/// Product formula over the factorization of n, at level chi.value_level().
CycloNum jordan_dirichlet(unsigned k, const DirichletCharacter& chi, std::uint64_t n);
CycloNum jordan_dirichlet_by_divisors(unsigned k, const DirichletCharacter& chi, std::uint64_t n);
/// Coprime-argument form n^k chi(n) prod (1 - 1/(chi(p) p^k)); requires gcd(n, m) = 1.
CycloNum jordan_dirichlet_coprime(unsigned k, const DirichletCharacter& chi, std::uint64_t n);
/// sum over residues j in [0, m) of chi(j) J_k^{j,m}(n).
CycloNum jordan_dirichlet_from_modulo(unsigned k, const DirichletCharacter& chi, std::uint64_t n);

/// J_k^{j,m}(n) = (1/phi(m)) sum_chi conj(chi(j)) J_k(chi; n). Requires gcd(j, m) = 1.
CycloNum modulo_from_characters(unsigned k, std::uint64_t j, std::uint64_t m, std::uint64_t n);

/// For s = gcd(j, m) > 1: 0 if s does not divide n, else s^k J_k^{j/s,m/s}(n/s)
/// with the reduced term evaluated through characters.
Int reduce_gcd_case(unsigned k, std::uint64_t j, std::uint64_t m, std::uint64_t n);

/// Closed form of J_0^{1,3}(n).
Int closed_form_mod3_degree0(std::uint64_t n);

/// Root totients with printed case tables.
enum class ClosedFormCase {
    minus_one_degree0,   // J_(0,-1)
    minus_one_degree1,   // J_(1,-1)
    fourth_root_degree0, // J_(0,i^p), p in {1, 3}
    cube_root_degree0,   // J_(0,w^p), w = e^{2 pi i/3}, p in {1, 2}
};

/// Root of unity the case refers to; throws domain_error for an invalid power.
RootOfUnity closed_form_root(ClosedFormCase c, unsigned power);
unsigned closed_form_degree(ClosedFormCase c);
CycloNum closed_form_root_totient(ClosedFormCase c, unsigned power, std::uint64_t n);

}  // namespace copart
