#pragma once

// Closed forms for 2, 3 and 4 parts, written out term by term with the root
// of unity powers reduced to rationals. Used as references for the general
// decomposition.

#include <cstdint>

#include "copart/arith.hpp"
#include "copart/polynomial.hpp"

namespace copart {

/// (2n - 1)/4 + (-1)^n/4.
Rational p2_closed_form(std::uint64_t n);
/// n^2/12 - 7/72 - (-1)^n/8 + (w^n + conj(w)^n)/9, w a primitive cube root of 1.
Rational p3_closed_form(std::uint64_t n);
/// Polynomial part, the (-1)^n (n + 1)/32 term, (i^n + (-i)^n)/16 and the
/// cube root term -(w^{n+1} - conj(w)^{n+1}) / (9 i sqrt 3).
Rational p4_closed_form(std::uint64_t n);

/// X^3/144 + X^2/48 - X/32 - 13/288.
Polynomial<Rational> p4_polynomial_part();

/// c'_2 = J_1, c'_3 = J_2/2 - 3J_1/2, c'_4 = J_3/6 - J_2 + 11J_1/6; valid for n >= 2.
Int coprime_compositions_closed_form(unsigned k, std::uint64_t n);

/// (1/32)(J_(1,-1) + J_(0,-1)) by cases on n.
Rational minus_one_pair_table(std::uint64_t n);
/// (1/16)(J_(0,i) + J_(0,-i)) by cases on n.
Rational fourth_root_pair_table(std::uint64_t n);
/// -(i sqrt3 + 3)/54 J_(0,w) + (i sqrt3 - 3)/54 J_(0,conj w) by cases on n.
Rational cube_root_pair_table(std::uint64_t n);

}  // namespace copart
