#include <random>

#include "copart/arith.hpp"
#include "copart/polynomial.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace copart;

TEST_CASE("factorize small values")
{
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK_THROWS_AS(factorize(0), domain_error);
}

TEST_CASE("factorize reconstructs n")
{
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        std::uint64_t prod = 1;
        std::uint64_t last = 0;
        for (const auto& [p, e] : factorize(n)) {
            REQUIRE(p > last);
            REQUIRE(is_prime(p));
            last = p;
            for (unsigned i = 0; i < e; ++i)
                prod *= p;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("factorize beyond the sieve")
{
    const std::uint64_t mersenne61 = (std::uint64_t(1) << 61) - 1;
    CHECK(is_prime(mersenne61));
    CHECK(factorize(mersenne61) == Factorization{{mersenne61, 1}});

    const std::uint64_t p = 4294967291ULL, q = 4294967279ULL;
    CHECK(factorize(p * q) == Factorization{{q, 1}, {p, 1}});
    CHECK(factorize(1000003ULL * 1000003ULL * 2) == Factorization{{2, 1}, {1000003, 2}});
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("is_prime agrees with trial division")
{
    for (std::uint64_t n = 0; n < 20000; ++n) {
        bool naive = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && naive; ++d)
            naive = n % d != 0;
        REQUIRE(is_prime(n) == naive);
    }
}

TEST_CASE("mobius and phi values")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(big_omega(12) == 3);
    CHECK(small_omega(12) == 2);
    CHECK(lcm_delta(4) == 12);
    CHECK(lcm_delta(10) == 2520);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        REQUIRE(mobius(n) == oracle::mobius(n));
        REQUIRE(euler_phi(n) == oracle::phi(n));
    }
}

TEST_CASE("mobius sums to the indicator of 1")
{
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        int s = 0;
        for (auto d : divisors(n))
            s += mobius(d);
        REQUIRE(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors match the naive list")
{
    for (std::uint64_t n = 1; n <= 3000; ++n)
        REQUIRE(divisors(n) == oracle::divisors(n));
}

TEST_CASE("phi and mobius are multiplicative")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
    int tested = 0;
    while (tested < 2000) {
        const auto a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1)
            continue;
        ++tested;
        REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        REQUIRE(mobius(a * b) == mobius(a) * mobius(b));
    }
}

TEST_CASE("stirling numbers of the first kind")
{
    CHECK(stirling_first(4, 2) == 11);
    CHECK(stirling_first(5, 1) == 24);
    CHECK(stirling_first(4, 1) == -6);
    for (unsigned k = 1; k <= 12; ++k)
        CHECK(stirling_first(k, k) == 1);

    // Expand X(X-1)...(X-k+1) directly.
    for (unsigned k = 1; k <= 15; ++k) {
        Polynomial<Int> p = Polynomial<Int>::constant(1);
        for (unsigned r = 0; r < k; ++r)
            p = p * Polynomial<Int>::linear_root(Int(r));
        for (unsigned i = 1; i <= k; ++i)
            REQUIRE(stirling_first(k, i) == p.coeff(i));
    }
    CHECK_THROWS_AS(stirling_first(0, 0), domain_error);
}

TEST_CASE("binomial and factorial")
{
    CHECK(binomial(9, 3) == 84);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(ipow(3, 4) == 81);
    CHECK(ipow(10, 0) == 1);
}

TEST_CASE("rational text round trip")
{
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK(parse_rational("-13/288") == Rational(-13, 288));
    CHECK(parse_rational("4/2") == 2);
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("x"), domain_error);
    CHECK_THROWS_AS(parse_rational(""), domain_error);
}

TEST_CASE("rational field laws on random fractions")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    auto draw = [&] {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        return r;
    };
    for (int i = 0; i < 2000; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        REQUIRE(Rational((a + b) + c) == Rational(a + (b + c)));
        REQUIRE(Rational((a * b) * c) == Rational(a * (b * c)));
        if (a != 0)
            REQUIRE(Rational(a * (1 / a)) == 1);
    }
}

TEST_CASE("polynomial helpers")
{
    using P = Polynomial<Rational>;
    const P a({1, 2, 1});  // (X + 1)^2
    const P b({1, 1});
    auto [q, r] = divmod(a, b);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divide_exact(a, P({0, 1})), consistency_error);
    CHECK(gcd(a, P({-1, 0, 1})) == b);

    const auto t = taylor_coefficients(a, Rational(1), 4);
    CHECK(t == std::vector<Rational>{4, 4, 1, 0});
    const auto s = series_divide(std::vector<Rational>{1}, std::vector<Rational>{1, -1}, 5);
    CHECK(s == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK(P().degree() == -1);
}
