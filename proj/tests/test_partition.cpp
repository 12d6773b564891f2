#include <algorithm>
#include <cstdlib>

#include "copart/known_formulas.hpp"
#include "copart/partition.hpp"
#include "copart/totient.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace copart;

namespace {

Int as_int(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

struct EnvGuard {
    explicit EnvGuard(const char* value) { setenv("COPART_ENUM_CAP", value, 1); }
    ~EnvGuard() { unsetenv("COPART_ENUM_CAP"); }
};

}  // namespace

TEST_CASE("composition counts")
{
    CHECK(compositions_count(3, 4) == 3);
    CHECK(compositions_count(4, 10) == 84);
    CHECK(compositions_count(5, 3) == 0);
    for (unsigned k = 1; k <= 8; ++k)
        CHECK(compositions_count(k, k) == 1);
    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 25; ++n)
            REQUIRE(compositions_count(k, n) == as_int(oracle::count_compositions(k, n, false)));
}

TEST_CASE("composition polynomial")
{
    using P = Polynomial<Rational>;
    CHECK(composition_polynomial(1).poly == P({1}));
    CHECK(composition_polynomial(2).poly == P({-1, 1}));
    CHECK(composition_polynomial(4).poly == P({Rational(-1), Rational(11, 6), Rational(-1), Rational(1, 6)}));
    for (unsigned k = 1; k <= 12; ++k) {
        const auto& cp = composition_polynomial(k);
        CHECK(cp.coefficient(k - 1) == Rational(Int(1), factorial(k - 1)));
        for (unsigned n = 1; n < k; ++n)
            REQUIRE(cp(Rational(n)) == 0);
        REQUIRE(cp(Rational(k)) == 1);
        for (std::uint64_t n = 1; n <= 60; ++n)
            REQUIRE(cp(Rational(as_int(n))) == Rational(compositions_count(k, n)));
    }
}

TEST_CASE("coprime compositions")
{
    CHECK(coprime_compositions(3, 4) == 3);
    CHECK(coprime_compositions(4, 8) == 34);
    for (std::uint64_t n = 2; n <= 500; ++n)
        REQUIRE(coprime_compositions(2, n) == jordan_totient(1, n));
    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 40; ++n)
            REQUIRE(coprime_compositions(k, n) == as_int(oracle::count_compositions(k, n, true)));
}

TEST_CASE("three routes to coprime compositions agree")
{
    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 120; ++n) {
            const Int v = coprime_compositions(k, n);
            REQUIRE(v == coprime_compositions_by_inversion(k, n));
            REQUIRE(v == coprime_compositions_by_enumeration(k, n));
        }
}

TEST_CASE("coprime composition closed forms for 2, 3 and 4 parts")
{
    for (unsigned k = 2; k <= 4; ++k)
        for (std::uint64_t n = 2; n <= 2000; ++n)
            REQUIRE(coprime_compositions(k, n) == coprime_compositions_closed_form(k, n));
}

TEST_CASE("Mobius round trips")
{
    for (unsigned k = 1; k <= 6; ++k)
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            Int sp = 0, sc = 0;
            for (auto d : divisors(n)) {
                sp += coprime_partitions(k, d);
                sc += coprime_compositions(k, d);
            }
            REQUIRE(sp == partitions_count(k, n));
            REQUIRE(sc == compositions_count(k, n));
        }
}

TEST_CASE("partition counts")
{
    CHECK(partitions_count(2, 7) == 3);
    CHECK(partitions_count(4, 10) == 9);
    CHECK(partitions_count(3, 3) == 1);
    CHECK(partitions_count(3, 0) == 0);
    CHECK(partitions_count(5, 4) == 0);
    for (std::uint64_t n = 1; n <= 100; ++n)
        REQUIRE(partitions_count(1, n) == 1);
    for (std::uint64_t n = 0; n <= 10000; ++n)
        REQUIRE(partitions_count(2, n) == as_int(n / 2));
    for (unsigned k = 1; k <= 6; ++k)
        for (std::uint64_t n = 0; n <= 40; ++n)
            REQUIRE(partitions_count(k, n) == as_int(oracle::count_partitions(k, n, n, false)));

    const PartitionTable t(5, 50);
    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 0; n <= 50; ++n)
            REQUIRE(t.at(k, n) == partitions_count(k, n));
}

TEST_CASE("coprime partitions")
{
    CHECK(coprime_partitions(3, 6) == 2);
    CHECK(coprime_partitions(3, 3) == 1);
    for (std::uint64_t n = 3; n <= 2000; ++n)
        REQUIRE(Rational(coprime_partitions(2, n)) == Rational(jordan_totient(1, n)) / 2);
    for (unsigned k = 1; k <= 6; ++k)
        for (std::uint64_t n = 1; n <= 40; ++n)
            REQUIRE(coprime_partitions(k, n) == as_int(oracle::count_partitions(k, n, n, true)));
}

TEST_CASE("partition enumeration")
{
    CHECK(enumerate_partitions(3, 5) == std::vector<Partition>{{3, 1, 1}, {2, 2, 1}});
    CHECK(enumerate_partitions(4, 4) == std::vector<Partition>{{1, 1, 1, 1}});
    CHECK(enumerate_coprime_partitions(2, 4) == std::vector<Partition>{{3, 1}});
    CHECK(enumerate_partitions(4, 3).empty());

    const auto all = enumerate_partitions(4, 30);
    CHECK(std::is_sorted(all.rbegin(), all.rend()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& p : all) {
        REQUIRE(std::is_sorted(p.rbegin(), p.rend()));
        std::uint64_t s = 0;
        for (auto x : p)
            s += x;
        REQUIRE(s == 30);
    }

    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 120; ++n) {
            REQUIRE(as_int(enumerate_partitions(k, n).size()) == partitions_count(k, n));
            REQUIRE(as_int(enumerate_coprime_partitions(k, n).size()) == coprime_partitions(k, n));
        }
}

TEST_CASE("enumeration cap")
{
    CHECK(enumeration_cap() == 150);
    CHECK_THROWS_AS(enumerate_partitions(2, 151), resource_error);
    CHECK_THROWS_AS(enumerate_partitions(2, 11, 10), resource_error);
    {
        EnvGuard env("200");
        CHECK(enumeration_cap() == 200);
        CHECK(enumerate_partitions(2, 180).size() == 90);
    }
    {
        EnvGuard env("5");
        CHECK_THROWS_AS(enumerate_coprime_partitions(2, 6), resource_error);
    }
    {
        EnvGuard env("lots");
        CHECK_THROWS_AS(enumeration_cap(), domain_error);
    }
}

TEST_CASE("asymptotic ratio")
{
    for (std::uint64_t n = 4; n <= 300; ++n)
        REQUIRE(asymptotic_ratio(3, n) == 1);
    for (std::uint64_t n = 3; n <= 300; ++n)
        REQUIRE(asymptotic_ratio(2, n) == 1);
    const Rational r = asymptotic_ratio(4, 1000);
    CHECK(r >= Rational(9, 10));
    CHECK(r <= Rational(11, 10));
    CHECK_THROWS_AS(asymptotic_ratio(1, 10), domain_error);
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(compositions_count(0, 3), domain_error);
    CHECK_THROWS_AS(coprime_compositions(2, 0), domain_error);
    CHECK_THROWS_AS(partitions_count(0, 3), domain_error);
    CHECK_THROWS_AS(coprime_partitions(2, 0), domain_error);
}
