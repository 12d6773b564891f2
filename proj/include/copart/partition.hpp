#pragma once

// Compositions and partitions of n into exactly k parts, and their coprime
// variants (parts with gcd 1).

#include <cstdint>
#include <memory>
#include <vector>

#include "copart/arith.hpp"
#include "copart/polynomial.hpp"

namespace copart {

/// c_k(n) = binomial(n - 1, k - 1); zero for n < k.
Int compositions_count(unsigned k, std::uint64_t n);

/// C_k(X) = (X - 1)...(X - k + 1) / (k - 1)!, so C_k(n) = c_k(n) for every n >= 1.
struct CompositionPolynomial {
    unsigned k;
    Polynomial<Rational> poly;

    /// a_{k,i}, i in [0, k).
    Rational coefficient(unsigned i) const { return poly.coeff(i); }
    Rational operator()(const Rational& x) const { return poly(x); }
};

/// Coefficients from the signed Stirling numbers s(k, i + 1) / (k - 1)!.
const CompositionPolynomial& composition_polynomial(unsigned k);

/// c'_k(n) as sum_i a_{k,i} J_i(n). Throws consistency_error if the sum is
/// not a non-negative integer.
Int coprime_compositions(unsigned k, std::uint64_t n);
/// c'_k(n) = sum_{d | n} mu(n/d) c_k(d).
Int coprime_compositions_by_inversion(unsigned k, std::uint64_t n);
/// Exhaustive count of ordered k-tuples with gcd 1 summing to n.
Int coprime_compositions_by_enumeration(unsigned k, std::uint64_t n);

/// Table of p_j(n) for j <= k_max, n <= n_max, filled with
/// p_j(n) = p_{j-1}(n - 1) + p_j(n - j).
class PartitionTable {
public:
    PartitionTable(unsigned k_max, std::uint64_t n_max);

    unsigned k_max() const { return k_max_; }
    std::uint64_t n_max() const { return n_max_; }
    const Int& at(unsigned k, std::uint64_t n) const { return rows_[k][n]; }

private:
    unsigned k_max_;
    std::uint64_t n_max_;
    std::vector<std::vector<Int>> rows_;
};

/// p_k(n), served from a process-wide table that grows on demand.
Int partitions_count(unsigned k, std::uint64_t n);

/// Shared table covering at least (k_max, n_max).
std::shared_ptr<const PartitionTable> partition_table(unsigned k_max, std::uint64_t n_max);

/// p'_k(n) = sum_{d | n} mu(n/d) p_k(d).
Int coprime_partitions(unsigned k, std::uint64_t n);

using Partition = std::vector<std::uint64_t>;

/// Default bound on n for enumeration; COPART_ENUM_CAP overrides it.
std::uint64_t enumeration_cap();

/// Non-increasing k-tuples summing to n, in lexicographically decreasing order.
/// Throws resource_error when n exceeds the cap.
std::vector<Partition> enumerate_partitions(unsigned k, std::uint64_t n);
std::vector<Partition> enumerate_partitions(unsigned k, std::uint64_t n, std::uint64_t cap);
std::vector<Partition> enumerate_coprime_partitions(unsigned k, std::uint64_t n);
std::vector<Partition> enumerate_coprime_partitions(unsigned k, std::uint64_t n, std::uint64_t cap);

/// p'_k(n) k! (k - 1)! / J_{k-1}(n). Requires k >= 2, n >= k.
Rational asymptotic_ratio(unsigned k, std::uint64_t n);

}  // namespace copart
