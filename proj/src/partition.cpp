#include "copart/partition.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "copart/totient.hpp"

namespace copart {

Int compositions_count(unsigned k, std::uint64_t n)
{
    if (k == 0 || n == 0)
        throw domain_error("compositions_count: k and n must be positive");
    return binomial(n - 1, k - 1);
}

const CompositionPolynomial& composition_polynomial(unsigned k)
{
    if (k == 0)
        throw domain_error("composition_polynomial: k must be positive");
    static std::mutex mu;
    static std::map<unsigned, CompositionPolynomial> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end())
        return it->second;
    const Int denom = factorial(k - 1);
    std::vector<Rational> c(k);
    for (unsigned i = 0; i < k; ++i) {
        c[i] = Rational(stirling_first(k, i + 1), denom);
        c[i].canonicalize();
    }
    return cache.emplace(k, CompositionPolynomial{k, Polynomial<Rational>(std::move(c))}).first->second;
}

Int coprime_compositions(unsigned k, std::uint64_t n)
{
    if (k == 0 || n == 0)
        throw domain_error("coprime_compositions: k and n must be positive");
    const auto& cp = composition_polynomial(k);
    Rational sum = 0;
    for (unsigned i = 0; i < k; ++i) {
        const Rational a = cp.coefficient(i);
        if (sgn(a) != 0)
            sum += a * Rational(jordan_totient(i, n));
    }
    if (sum.get_den() != 1 || sgn(sum) < 0)
        throw consistency_error("coprime_compositions: Jordan combination is not a non-negative integer at n = " +
                                std::to_string(n) + " (got " + sum.get_str() + ")");
    return sum.get_num();
}

Int coprime_compositions_by_inversion(unsigned k, std::uint64_t n)
{
    if (k == 0 || n == 0)
        throw domain_error("coprime_compositions: k and n must be positive");
    Int sum = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu != 0)
            sum += mu * compositions_count(k, d);
    }
    return sum;
}

namespace {

// Ordered tuples of `parts` positive integers summing to `rest`, with the
// running gcd folded in; the last part is forced.
std::uint64_t count_coprime_tail(unsigned parts, std::uint64_t rest, std::uint64_t g)
{
    if (parts == 1)
        return std::gcd(g, rest) == 1 ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint64_t x = 1; x + (parts - 1) <= rest; ++x)
        total += count_coprime_tail(parts - 1, rest - x, std::gcd(g, x));
    return total;
}

}  // namespace

Int coprime_compositions_by_enumeration(unsigned k, std::uint64_t n)
{
    if (k == 0 || n == 0)
        throw domain_error("coprime_compositions: k and n must be positive");
    if (n < k)
        return 0;
    return Int(static_cast<unsigned long>(count_coprime_tail(k, n, 0)));
}

// ---------------------------------------------------------------------------
// Partitions

PartitionTable::PartitionTable(unsigned k_max, std::uint64_t n_max)
    : k_max_(k_max), n_max_(n_max), rows_(k_max + 1, std::vector<Int>(n_max + 1))
{
    rows_[0][0] = 1;
    for (unsigned k = 1; k <= k_max; ++k)
        for (std::uint64_t n = k; n <= n_max; ++n)
            rows_[k][n] = rows_[k - 1][n - 1] + rows_[k][n - k];
}

std::shared_ptr<const PartitionTable> partition_table(unsigned k_max, std::uint64_t n_max)
{
    static std::mutex mu;
    static std::shared_ptr<const PartitionTable> current;
    std::lock_guard lock(mu);
    if (!current || current->k_max() < k_max || current->n_max() < n_max) {
        unsigned k = k_max;
        std::uint64_t n = n_max;
        if (current) {
            k = std::max(k, current->k_max());
            n = std::max(n, current->n_max());
        }
        // Grow geometrically so scans over increasing n rebuild rarely.
        n = std::max<std::uint64_t>(n, current ? 2 * current->n_max() : 64);
        current = std::make_shared<const PartitionTable>(std::max(k, 8u), n);
    }
    return current;
}

Int partitions_count(unsigned k, std::uint64_t n)
{
    if (k == 0)
        throw domain_error("partitions_count: k must be positive");
    if (n < k)
        return 0;
    return partition_table(k, n)->at(k, n);
}

Int coprime_partitions(unsigned k, std::uint64_t n)
{
    if (k == 0 || n == 0)
        throw domain_error("coprime_partitions: k and n must be positive");
    const auto table = partition_table(k, n);
    Int sum = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu != 0 && d >= k)
            sum += mu * table->at(k, d);
    }
    return sum;
}

std::uint64_t enumeration_cap()
{
    if (const char* env = std::getenv("COPART_ENUM_CAP")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0)
                return v;
        } catch (const std::logic_error&) {
        }
        throw domain_error(std::string("COPART_ENUM_CAP must be a positive integer, got '") + env + "'");
    }
    return 150;
}

namespace {

void emit_partitions(unsigned parts, std::uint64_t rest, std::uint64_t max_part, Partition& prefix,
                     std::vector<Partition>& out)
{
    if (parts == 0) {
        if (rest == 0)
            out.push_back(prefix);
        return;
    }
    // Largest admissible part first gives lexicographically decreasing output.
    const std::uint64_t hi = std::min(max_part, rest - (parts - 1));
    for (std::uint64_t x = hi; x >= 1; --x) {
        if (x * parts < rest)
            break;
        prefix.push_back(x);
        emit_partitions(parts - 1, rest - x, x, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned k, std::uint64_t n) { return enumerate_partitions(k, n, enumeration_cap()); }

std::vector<Partition> enumerate_partitions(unsigned k, std::uint64_t n, std::uint64_t cap)
{
    if (k == 0)
        throw domain_error("enumerate_partitions: k must be positive");
    if (n > cap)
        throw resource_error("enumerate_partitions: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                             std::to_string(cap));
    std::vector<Partition> out;
    if (n < k)
        return out;
    Partition prefix;
    prefix.reserve(k);
    emit_partitions(k, n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_coprime_partitions(unsigned k, std::uint64_t n)
{
    return enumerate_coprime_partitions(k, n, enumeration_cap());
}

std::vector<Partition> enumerate_coprime_partitions(unsigned k, std::uint64_t n, std::uint64_t cap)
{
    auto all = enumerate_partitions(k, n, cap);
    std::vector<Partition> out;
    for (auto& p : all) {
        std::uint64_t g = 0;
        for (auto x : p)
            g = std::gcd(g, x);
        if (g == 1)
            out.push_back(std::move(p));
    }
    return out;
}

Rational asymptotic_ratio(unsigned k, std::uint64_t n)
{
    if (k < 2 || n < k)
        throw domain_error("asymptotic_ratio: requires k >= 2 and n >= k");
    Rational r(coprime_partitions(k, n) * factorial(k) * factorial(k - 1), jordan_totient(k - 1, n));
    r.canonicalize();
    return r;
}

}  // namespace copart
