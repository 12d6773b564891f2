// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every identity is checked by exact equality. Runtime targets count toward
// the verdict where a criterion states one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "copart/cli.hpp"
#include "copart/known_formulas.hpp"
#include "copart/partition.hpp"
#include "copart/quasipoly.hpp"
#include "copart/serialize.hpp"
#include "copart/totient.hpp"
#include "oracles.hpp"

using namespace copart;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw Failure{what};
}

std::string at(const char* what, std::uint64_t n) { return std::string(what) + " at n=" + std::to_string(n); }

CycloNum q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return CycloNum(r);
}

Rational half(const Int& x) { return Rational(x) / 2; }

// sum_{d | n} mu(n/d) d^k w^d for w = zeta_m^e, accumulated on exponents of zeta_m.
std::vector<mpz_class> root_totient_by_exponent(unsigned k, std::uint64_t m, std::uint64_t e, std::uint64_t n)
{
    std::vector<mpz_class> by_exp(m, 0);
    for (auto d : oracle::divisors(n))
        by_exp[(e * d) % m] += oracle::mobius(n / d) * oracle::power(d, k);
    return by_exp;
}

// The same sum as an element of Q(i) (m = 4) or Q(w) (m = 3), in the basis {1, zeta_m}.
CycloNum root_totient_oracle(unsigned k, std::uint64_t m, std::uint64_t e, std::uint64_t n)
{
    const auto v = root_totient_by_exponent(k, m, e, n);
    switch (m) {
    case 1:
        return CycloNum(Int(v[0]));
    case 2:
        return CycloNum(Int(v[0] - v[1]));
    case 3:  // zeta^2 = -1 - zeta
        return CycloNum::from_coefficients(3, {Rational(v[0] - v[2]), Rational(v[1] - v[2])});
    case 4:  // zeta^2 = -1
        return CycloNum::from_coefficients(4, {Rational(v[0] - v[2]), Rational(v[1] - v[3])});
    default:
        throw Failure{"root oracle supports orders up to 4"};
    }
}

struct Criterion {
    int id;
    std::string name;
    double target_seconds;  // 0 for none
    std::function<void()> body;
};

// ---------------------------------------------------------------------------

void golden_k2()
{
    for (std::uint64_t n = 3; n <= 10000; ++n)
        expect(Rational(coprime_partitions(2, n)) == half(jordan_totient(1, n)),
               at("p'_2 = J_1/2", n));
    expect(Rational(coprime_partitions(2, 2)) != half(jordan_totient(1, 2)), "p'_2(2) equals J_1(2)/2");
    for (std::uint64_t n = 1; n <= 300; ++n)
        expect(jordan_totient(1, n) == Int(oracle::phi(n)), at("J_1 against phi", n));
}

void golden_k3()
{
    for (std::uint64_t n = 4; n <= 10000; ++n)
        expect(Rational(coprime_partitions(3, n)) == Rational(jordan_totient(2, n)) / 12, at("p'_3 = J_2/12", n));
    expect(Rational(coprime_partitions(3, 3)) != Rational(jordan_totient(2, 3)) / 12, "p'_3(3) equals J_2(3)/12");
    for (std::uint64_t n = 1; n <= 60; ++n)
        expect(coprime_partitions(3, n) == Int(static_cast<unsigned long>(oracle::count_partitions(3, n, n, true))),
               at("p'_3 against enumeration", n));
}

void binet_equivalence()
{
    for (unsigned k = 2; k <= 6; ++k) {
        const BinetDecomposition d = binet_decompose(k);
        for (std::uint64_t n = 1; n <= 2000; ++n)
            expect(d.evaluate_rational(n) == Rational(partitions_count(k, n)), at(("Binet form k=" + std::to_string(k)).c_str(), n));
        for (std::uint64_t n = 1; n <= 40; ++n)
            expect(partitions_count(k, n) == Int(static_cast<unsigned long>(oracle::count_partitions(k, n, n, false))),
                   at("p_k against enumeration", n));
    }
}

void combination_equivalence()
{
    for (unsigned k = 2; k <= 6; ++k) {
        const CoprimeCombination c = coprime_combination(k);
        for (std::uint64_t n = 1; n <= 2000; ++n)
            expect(evaluate_combination(c, n) == coprime_partitions(k, n),
                   at(("combination k=" + std::to_string(k)).c_str(), n));
    }
}

struct Printed {
    unsigned degree;
    RootOfUnity omega;
    CycloNum coeff;
};

std::vector<Printed> printed(unsigned k)
{
    const RootOfUnity one, minus_one = RootOfUnity::minus_one();
    const CycloNum w = CycloNum::zeta_power(3, 1);
    switch (k) {
    case 2:
        return {{0, one, q(-1, 4)}, {1, one, q(1, 2)}, {0, minus_one, q(1, 4)}};
    case 3:
        return {{0, one, q(-7, 72)}, {1, one, q(0)},        {2, one, q(1, 12)},
                {0, minus_one, q(-1, 8)}, {0, {3, 1}, q(1, 9)}, {0, {3, 2}, q(1, 9)}};
    default:
        return {{0, one, q(-13, 288)},
                {1, one, q(-1, 32)},
                {2, one, q(1, 48)},
                {3, one, q(1, 144)},
                {0, minus_one, q(1, 32)},
                {1, minus_one, q(1, 32)},
                {0, {3, 1}, (w + q(2)) * q(-1, 27)},
                {0, {3, 2}, (w - q(1)) * q(1, 27)},
                {0, {4, 1}, q(1, 16)},
                {0, {4, 3}, q(1, 16)}};
    }
}

void printed_coefficients()
{
    for (unsigned k = 2; k <= 4; ++k) {
        std::ostringstream out, err;
        expect(cli::run({"decompose", "--k", std::to_string(k)}, out, err) == cli::exit_ok, "decompose failed: " + err.str());
        const auto doc = decomposition_from_json(Json::parse(out.str()));
        const auto expected = printed(k);
        expect(doc.combination.entries.size() == expected.size(), "term count for k=" + std::to_string(k));
        for (const auto& p : expected) {
            bool hit = false;
            for (const auto& e : doc.combination.entries)
                if (e.degree == p.degree && e.omega == p.omega)
                    hit = e.coeff == p.coeff;
            expect(hit, "coefficient of J_(" + std::to_string(p.degree) + "," + p.omega.to_string() + ") for k=" +
                            std::to_string(k));
        }
    }
    const Polynomial<Rational> p4({Rational(-13, 288), Rational(-1, 32), Rational(1, 48), Rational(1, 144)});
    expect(polynomial_part(4) == p4, "polynomial part for k=4");
}

void closed_form_tables()
{
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        expect(closed_form_mod3_degree0(n) == Int(oracle::jordan_mod(0, 1, 3, n)), at("J_0^{1,3}", n));
        expect(closed_form_root_totient(ClosedFormCase::minus_one_degree0, 1, n) == root_totient_oracle(0, 2, 1, n),
               at("J_(0,-1)", n));
        expect(closed_form_root_totient(ClosedFormCase::minus_one_degree1, 1, n) == root_totient_oracle(1, 2, 1, n),
               at("J_(1,-1)", n));
        for (unsigned p : {1u, 3u})
            expect(closed_form_root_totient(ClosedFormCase::fourth_root_degree0, p, n) == root_totient_oracle(0, 4, p, n),
                   at("J_(0,i^p)", n));
        for (unsigned p : {1u, 2u})
            expect(closed_form_root_totient(ClosedFormCase::cube_root_degree0, p, n) == root_totient_oracle(0, 3, p, n),
                   at("J_(0,w^p)", n));

        CycloNum minus_pair = root_totient_oracle(1, 2, 1, n) + root_totient_oracle(0, 2, 1, n);
        minus_pair *= Rational(1, 32);
        expect(CycloNum(minus_one_pair_table(n)) == minus_pair, at("(-1) pair table", n));
        CycloNum fourth_pair = root_totient_oracle(0, 4, 1, n) + root_totient_oracle(0, 4, 3, n);
        fourth_pair *= Rational(1, 16);
        expect(CycloNum(fourth_root_pair_table(n)) == fourth_pair, at("(i) pair table", n));
        // -(i sqrt3 + 3)/54 = -(w + 2)/27 and (i sqrt3 - 3)/54 = (w - 1)/27.
        const CycloNum w = CycloNum::zeta_power(3, 1);
        const CycloNum cube_pair = (w + q(2)) * q(-1, 27) * root_totient_oracle(0, 3, 1, n) +
                                   (w - q(1)) * q(1, 27) * root_totient_oracle(0, 3, 2, n);
        expect(CycloNum(cube_root_pair_table(n)) == cube_pair, at("cube root pair table", n));
    }
    expect(minus_one_pair_table(1) * 32 == -2, "(-1) pair table at n=1");
    expect(minus_one_pair_table(2) * 32 == 5, "(-1) pair table at n=2");
}

void character_machinery()
{
    for (std::uint64_t m = 1; m <= 12; ++m)
        for (std::uint64_t j = 0; j < m; ++j) {
            const bool unit = std::gcd(j, m) == 1;
            for (unsigned k = 0; k <= 3; ++k)
                for (std::uint64_t n = 1; n <= 2000; ++n) {
                    const Int direct = jordan_mod_totient(k, j, m, n);
                    const std::string where = "k=" + std::to_string(k) + " j=" + std::to_string(j) + " m=" + std::to_string(m);
                    if (unit)
                        expect(modulo_from_characters(k, j, m, n) == CycloNum(direct), at(("characters " + where).c_str(), n));
                    else
                        expect(reduce_gcd_case(k, j, m, n) == direct, at(("gcd reduction " + where).c_str(), n));
                }
            for (std::uint64_t n = 1; n <= 150; ++n)
                expect(jordan_mod_totient(2, j, m, n) == oracle::jordan_mod(2, j % m, m, n), at("modulo totient oracle", n));
        }
}

void composition_identities()
{
    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 120; ++n) {
            const Int v = coprime_compositions(k, n);
            expect(v == coprime_compositions_by_inversion(k, n), at("Jordan route vs inversion", n));
            expect(v == coprime_compositions_by_enumeration(k, n), at("Jordan route vs enumeration", n));
            if (n <= 30)
                expect(v == Int(static_cast<unsigned long>(oracle::count_compositions(k, n, true))), at("composition oracle", n));
        }
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        const Rational j1(jordan_totient(1, n)), j2(jordan_totient(2, n)), j3(jordan_totient(3, n));
        expect(Rational(coprime_compositions_by_inversion(2, n)) == j1, at("c'_2 = J_1", n));
        expect(Rational(coprime_compositions_by_inversion(3, n)) == j2 / 2 - 3 * j1 / 2, at("c'_3", n));
        expect(Rational(coprime_compositions_by_inversion(4, n)) == j3 / 6 - j2 + 11 * j1 / 6, at("c'_4", n));
    }
}

void enumeration_counts()
{
    for (unsigned k = 1; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 120; ++n) {
            expect(Int(static_cast<unsigned long>(enumerate_partitions(k, n).size())) == partitions_count(k, n),
                   at(("partitions k=" + std::to_string(k)).c_str(), n));
            expect(Int(static_cast<unsigned long>(enumerate_coprime_partitions(k, n).size())) == coprime_partitions(k, n),
                   at(("coprime partitions k=" + std::to_string(k)).c_str(), n));
        }
}

void asymptotic_band()
{
    for (std::uint64_t n = 500; n <= 2000; ++n) {
        const Rational r = asymptotic_ratio(4, n);
        expect(r >= Rational(9, 10) && r <= Rational(11, 10), at("ratio outside [0.9, 1.1]", n));
    }
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "p'_2 = J_1/2 for 3 <= n <= 10^4, not at n = 2", 5, golden_k2},
        {2, "p'_3 = J_2/12 for 4 <= n <= 10^4, not at n = 3", 5, golden_k3},
        {3, "Binet form = p_k for k in 2..6, n <= 2000", 60, binet_equivalence},
        {4, "coprime combination = p'_k for k in 2..6, n <= 2000", 120, combination_equivalence},
        {5, "printed coefficients for k = 2, 3, 4", 0, printed_coefficients},
        {6, "closed forms and case tables for n <= 5000", 0, closed_form_tables},
        {7, "character reconstruction and gcd reduction, m <= 12, k <= 3, n <= 2000", 0, character_machinery},
        {8, "coprime composition routes and expansions", 0, composition_identities},
        {9, "enumeration lengths match counts, k <= 5, n <= 120", 0, enumeration_counts},
        {10, "asymptotic_ratio(4, n) in [0.9, 1.1] for 500 <= n <= 2000", 0, asymptotic_band},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.target_seconds > 0 && secs > c.target_seconds) {
            ok = false;
            detail = "over the " + std::to_string(static_cast<int>(c.target_seconds)) + " s target";
        }
        failed += ok ? 0 : 1;
        std::printf("%s  %2d  %-72s %8.2f s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    detail.empty() ? "" : "  ", detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
