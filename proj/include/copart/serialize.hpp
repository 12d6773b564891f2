#pragma once

// JSON layout for decompositions:
//
//   {"k": int, "level": int,
//    "binet": [{"omega": {"m": int, "j": int}, "multiplicity": int, "coeffs": [cyclo, ...]}, ...],
//    "coprime_combination": [{"degree": int, "omega": {...}, "coeff": cyclo}, ...]}
//
//   cyclo = {"level": int, "coeffs": ["a/b", ...]}   phi(level) entries, low to high
//
// Every cyclo in a document is written at the document level. Integers are
// written without a denominator.

#include "json.hpp"

#include "copart/cyclo.hpp"
#include "copart/quasipoly.hpp"

namespace copart {

using Json = nlohmann::ordered_json;

Json to_json(const CycloNum& x);
/// x lifted to `level` first.
Json to_json(const CycloNum& x, std::uint64_t level);
Json to_json(const RootOfUnity& w);

/// Parsers throw domain_error on malformed documents.
CycloNum cyclo_from_json(const Json& j);
RootOfUnity root_from_json(const Json& j);

struct DecompositionDocument {
    BinetDecomposition binet;
    CoprimeCombination combination;
};

Json to_json(const BinetDecomposition& d, const CoprimeCombination& c);
DecompositionDocument decomposition_from_json(const Json& j);

/// Value equality of coefficients, independent of the levels they are stored at.
bool equivalent(const BinetDecomposition& a, const BinetDecomposition& b);
bool equivalent(const CoprimeCombination& a, const CoprimeCombination& b);

}  // namespace copart
