#include "copart/verify.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "copart/known_formulas.hpp"
#include "copart/partition.hpp"
#include "copart/quasipoly.hpp"
#include "copart/totient.hpp"

namespace copart {

namespace {

// Counts checks and keeps the first failure. Once a failure is recorded
// further checks are skipped.
class Checker {
public:
    explicit Checker(std::string name) { report_.name = std::move(name); }

    bool failed() const { return !report_.passed(); }

    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::function<std::string()>& where)
    {
        if (failed())
            return;
        ++report_.checks;
        if (!(actual == expected)) {
            std::ostringstream os;
            os << where() << ": got " << show(actual) << ", expected " << show(expected);
            report_.counterexample = os.str();
        }
    }

    void require(bool ok, const std::function<std::string()>& what)
    {
        if (failed())
            return;
        ++report_.checks;
        if (!ok)
            report_.counterexample = what();
    }

    SuiteReport finish() { return std::move(report_); }

private:
    static std::string show(const CycloNum& x) { return x.to_display_string(); }
    static std::string show(const Rational& x) { return to_string(x); }
    static std::string show(const Int& x) { return to_string(x); }
    static std::string show(const std::optional<Rational>& x) { return x ? to_string(*x) : "(not rational)"; }
    static std::string show(std::size_t x) { return std::to_string(x); }

    SuiteReport report_;
};

std::string at(const std::string& what, unsigned k, std::uint64_t n)
{
    return what + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

// Runs `body` and turns an escaping library error into a counterexample.
SuiteReport guarded(const std::string& name, const std::function<void(Checker&)>& body)
{
    Checker c(name);
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, [&] { return std::string("unexpected error: ") + e.what(); });
    }
    return c.finish();
}

SuiteReport totient_suite(const VerifyBounds& b)
{
    return guarded("totient", [&](Checker& c) {
        const unsigned t_max = std::min(b.k_max, 4u);
        for (unsigned t = 0; t <= t_max && !c.failed(); ++t)
            for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n)
                c.equal(jordan_totient(t, n), jordan_totient_by_divisors(t, n), [&] { return at("J product formula", t, n); });

        const std::uint64_t order_max = std::max<std::uint64_t>(2, std::min(b.k_max, 6u));
        const unsigned deg_max = std::min(b.k_max, 3u);
        for (std::uint64_t m = 1; m <= order_max; ++m)
            for (std::uint64_t j = 0; j < m; ++j) {
                if (std::gcd(j, m) != 1)
                    continue;
                const RootOfUnity w(m, j);
                for (unsigned t = 0; t <= deg_max && !c.failed(); ++t)
                    for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n)
                        c.equal(jordan_root_totient(t, w, n), split_root_into_modulo(t, w, n),
                                [&] { return at("root totient at " + w.to_string() + " split by residues", t, n); });
            }

        for (std::uint64_t m = 1; m <= 12; ++m) {
            for (const auto& chi : enumerate_characters(m))
                for (unsigned t = 0; t <= deg_max && !c.failed(); ++t)
                    for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n) {
                        const CycloNum v = jordan_dirichlet(t, chi, n);
                        auto where = [&] { return at("Dirichlet totient mod " + std::to_string(m), t, n); };
                        c.equal(v, jordan_dirichlet_by_divisors(t, chi, n), where);
                        c.equal(v, jordan_dirichlet_from_modulo(t, chi, n), where);
                        if (std::gcd(n, m) == 1)
                            c.equal(v, jordan_dirichlet_coprime(t, chi, n), where);
                    }
            for (std::uint64_t j = 0; j < m; ++j)
                for (unsigned t = 0; t <= deg_max && !c.failed(); ++t)
                    for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n) {
                        const Int direct = jordan_mod_totient(t, j, m, n);
                        auto where = [&] {
                            return at("modulo totient j=" + std::to_string(j) + " m=" + std::to_string(m), t, n);
                        };
                        if (std::gcd(j, m) == 1)
                            c.equal(modulo_from_characters(t, j, m, n), CycloNum(direct), where);
                        else
                            c.equal(reduce_gcd_case(t, j, m, n), direct, where);
                    }
        }

        for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n) {
            c.equal(closed_form_mod3_degree0(n), jordan_mod_totient(0, 1, 3, n), [&] { return at("J_0 mod 3 closed form", 0, n); });
            const std::pair<ClosedFormCase, unsigned> cases[] = {
                {ClosedFormCase::minus_one_degree0, 1}, {ClosedFormCase::minus_one_degree1, 1},
                {ClosedFormCase::fourth_root_degree0, 1}, {ClosedFormCase::fourth_root_degree0, 3},
                {ClosedFormCase::cube_root_degree0, 1}, {ClosedFormCase::cube_root_degree0, 2},
            };
            for (const auto& [cs, p] : cases) {
                const RootOfUnity w = closed_form_root(cs, p);
                const unsigned t = closed_form_degree(cs);
                c.equal(closed_form_root_totient(cs, p, n), jordan_root_totient(t, w, n),
                        [&] { return at("root totient closed form at " + w.to_string(), t, n); });
            }
        }
    });
}

SuiteReport partition_suite(const VerifyBounds& b)
{
    return guarded("partition", [&](Checker& c) {
        const std::uint64_t enum_max = std::min<std::uint64_t>(b.n_max, 120);
        const unsigned enum_k = std::min(b.k_max, 5u);
        for (unsigned k = 1; k <= b.k_max && !c.failed(); ++k)
            for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n) {
                const Int jordan = coprime_compositions(k, n);
                c.equal(jordan, coprime_compositions_by_inversion(k, n), [&] { return at("coprime compositions", k, n); });
                if (k <= enum_k && n <= enum_max) {
                    c.equal(jordan, coprime_compositions_by_enumeration(k, n),
                            [&] { return at("coprime compositions by enumeration", k, n); });
                    c.equal(Int(static_cast<unsigned long>(enumerate_partitions(k, n, enum_max).size())),
                            partitions_count(k, n), [&] { return at("partition enumeration", k, n); });
                    c.equal(Int(static_cast<unsigned long>(enumerate_coprime_partitions(k, n, enum_max).size())),
                            coprime_partitions(k, n), [&] { return at("coprime partition enumeration", k, n); });
                }
                if (k >= 2 && k <= 4 && n >= 2)
                    c.equal(jordan, coprime_compositions_closed_form(k, n),
                            [&] { return at("coprime composition closed form", k, n); });
            }
    });
}

SuiteReport binet_suite(const VerifyBounds& b)
{
    return guarded("binet", [&](Checker& c) {
        for (unsigned k = 2; k <= b.k_max && !c.failed(); ++k) {
            const auto& d = cached_binet(k);
            const auto comb = coprime_combination(k);
            for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n) {
                c.equal(d.evaluate_rational(n), std::optional<Rational>(Rational(partitions_count(k, n))),
                        [&] { return at("Binet form", k, n); });
                c.equal(evaluate_combination(comb, n), coprime_partitions(k, n),
                        [&] { return at("coprime combination", k, n); });
            }
        }
    });
}

// (degree, root, coefficient) triples as printed for 2, 3 and 4 parts.
struct PrintedEntry {
    unsigned degree;
    RootOfUnity omega;
    CycloNum coeff;
};

std::vector<PrintedEntry> printed_combination(unsigned k)
{
    auto q = [](long a, long b) {
        Rational r(a, b);
        r.canonicalize();
        return CycloNum(r);
    };
    const RootOfUnity one, minus_one = RootOfUnity::minus_one();
    switch (k) {
    case 2:
        return {{0, one, q(-1, 4)}, {1, one, q(1, 2)}, {0, minus_one, q(1, 4)}};
    case 3:
        return {{0, one, q(-7, 72)}, {1, one, q(0, 1)}, {2, one, q(1, 12)}, {0, minus_one, q(-1, 8)},
                {0, {3, 1}, q(1, 9)}, {0, {3, 2}, q(1, 9)}};
    case 4: {
        const CycloNum w = CycloNum::zeta_power(3, 1);
        CycloNum at_w = -(w + CycloNum(2));
        at_w *= Rational(1, 27);
        CycloNum at_wbar = w - CycloNum(1);
        at_wbar *= Rational(1, 27);
        return {{0, one, q(-13, 288)}, {1, one, q(-1, 32)}, {2, one, q(1, 48)}, {3, one, q(1, 144)},
                {0, minus_one, q(1, 32)}, {1, minus_one, q(1, 32)}, {0, {3, 1}, at_w}, {0, {3, 2}, at_wbar},
                {0, {4, 1}, q(1, 16)}, {0, {4, 3}, q(1, 16)}};
    }
    default:
        return {};
    }
}

SuiteReport golden_suite(const VerifyBounds& b)
{
    return guarded("golden", [&](Checker& c) {
        const unsigned k_top = std::min(b.k_max, 4u);
        for (unsigned k = 2; k <= k_top && !c.failed(); ++k) {
            const auto comb = coprime_combination(k);
            const auto printed = printed_combination(k);
            c.equal(comb.entries.size(), printed.size(), [&] { return "number of combination terms for k=" + std::to_string(k); });
            for (const auto& p : printed) {
                const CombinationEntry* hit = nullptr;
                for (const auto& e : comb.entries)
                    if (e.degree == p.degree && e.omega == p.omega)
                        hit = &e;
                auto where = [&] {
                    return "coefficient of J_(" + std::to_string(p.degree) + "," + p.omega.to_string() + ") for k=" +
                           std::to_string(k);
                };
                c.require(hit != nullptr, [&] { return where() + ": missing"; });
                if (hit)
                    c.equal(hit->coeff, p.coeff, where);
            }
        }
        if (k_top >= 4)
            c.require(polynomial_part(4) == p4_polynomial_part(), [] { return std::string("polynomial part for k=4"); });

        for (std::uint64_t n = 1; n <= b.n_max && !c.failed(); ++n) {
            if (k_top >= 2) {
                c.equal(p2_closed_form(n), Rational(partitions_count(2, n)), [&] { return at("p_2 closed form", 2, n); });
                const Rational half_phi = Rational(jordan_totient(1, n)) / 2;
                const Rational cp2(coprime_partitions(2, n));
                if (n >= 3)
                    c.equal(cp2, half_phi, [&] { return at("p'_2 = J_1/2", 2, n); });
                else if (n == 2)
                    c.require(cp2 != half_phi, [] { return std::string("p'_2(2) must differ from J_1(2)/2"); });
            }
            if (k_top >= 3) {
                c.equal(p3_closed_form(n), Rational(partitions_count(3, n)), [&] { return at("p_3 closed form", 3, n); });
                const Rational twelfth = Rational(jordan_totient(2, n)) / 12;
                const Rational cp3(coprime_partitions(3, n));
                if (n >= 4)
                    c.equal(cp3, twelfth, [&] { return at("p'_3 = J_2/12", 3, n); });
                else if (n == 3)
                    c.require(cp3 != twelfth, [] { return std::string("p'_3(3) must differ from J_2(3)/12"); });
            }
            if (k_top >= 4) {
                c.equal(p4_closed_form(n), Rational(partitions_count(4, n)), [&] { return at("p_4 closed form", 4, n); });
                const RootOfUnity mo = RootOfUnity::minus_one();
                CycloNum pair = jordan_root_totient(1, mo, n) + jordan_root_totient(0, mo, n);
                pair *= Rational(1, 32);
                c.equal(pair, CycloNum(minus_one_pair_table(n)), [&] { return at("(-1)-pair table", 4, n); });
                CycloNum fourth = jordan_root_totient(0, {4, 1}, n) + jordan_root_totient(0, {4, 3}, n);
                fourth *= Rational(1, 16);
                c.equal(fourth, CycloNum(fourth_root_pair_table(n)), [&] { return at("(i)-pair table", 4, n); });
                const auto printed = printed_combination(4);
                const CycloNum cube = printed[6].coeff * jordan_root_totient(0, {3, 1}, n) +
                                      printed[7].coeff * jordan_root_totient(0, {3, 2}, n);
                c.equal(cube, CycloNum(cube_root_pair_table(n)), [&] { return at("cube-root pair table", 4, n); });
            }
        }
    });
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"totient", "partition", "binet", "golden"};
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& suite, const VerifyBounds& bounds)
{
    using Runner = SuiteReport (*)(const VerifyBounds&);
    const std::pair<const char*, Runner> table[] = {
        {"totient", totient_suite}, {"partition", partition_suite}, {"binet", binet_suite}, {"golden", golden_suite}};
    std::vector<SuiteReport> out;
    for (const auto& [name, run] : table)
        if (suite == "all" || suite == name)
            out.push_back(run(bounds));
    if (out.empty())
        throw domain_error("unknown verification suite '" + suite + "'");
    return out;
}

}  // namespace copart
