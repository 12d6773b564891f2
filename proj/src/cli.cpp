#include "copart/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "copart/partition.hpp"
#include "copart/quasipoly.hpp"
#include "copart/serialize.hpp"
#include "copart/totient.hpp"
#include "copart/verify.hpp"

namespace copart::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr unsigned max_degree = 4096;

const std::vector<std::string>& variants()
{
    static const std::vector<std::string> v{"jordan",       "jordan-mod",          "jordan-root", "jordan-dirichlet",
                                            "compositions", "coprime-compositions", "partitions",  "coprime-partitions"};
    return v;
}

// Flags shared by single-value queries and tabulation.
struct Query {
    std::string variant;
    unsigned k = 0;
    std::optional<std::uint64_t> j, m;
    std::optional<std::string> omega;
    std::optional<std::size_t> chi_index;
};

// A query with its flags checked and parsed.
class Evaluator {
public:
    explicit Evaluator(const Query& q) : q_(q)
    {
        if (q.k > max_degree)
            throw UsageError("--k must be at most " + std::to_string(max_degree));
        const auto& v = q.variant;
        if (v == "jordan-mod") {
            need(q.j, "--j");
            need(q.m, "--m");
            if (*q.m == 0)
                throw UsageError("--m must be positive");
        } else if (v == "jordan-root") {
            if (!q.omega)
                throw UsageError(v + " requires --omega");
            try {
                root_ = RootOfUnity::parse(*q.omega);
            } catch (const std::exception& e) {
                throw UsageError(std::string("--omega: ") + e.what());
            }
        } else if (v == "jordan-dirichlet") {
            need(q.m, "--m");
            need(q.chi_index, "--chi-index");
            if (*q.m == 0)
                throw UsageError("--m must be positive");
            const auto& chars = enumerate_characters(*q.m);
            if (*q.chi_index >= chars.size())
                throw UsageError("--chi-index must be below phi(m) = " + std::to_string(chars.size()));
            chi_ = &chars[*q.chi_index];
        }
    }

    CycloNum operator()(std::uint64_t n) const
    {
        const auto& v = q_.variant;
        const unsigned k = q_.k;
        if (v == "jordan")
            return CycloNum(jordan_totient(k, n));
        if (v == "jordan-mod")
            return CycloNum(jordan_mod_totient(k, *q_.j, *q_.m, n));
        if (v == "jordan-root")
            return jordan_root_totient(k, root_, n);
        if (v == "jordan-dirichlet")
            return jordan_dirichlet(k, *chi_, n);
        if (v == "compositions")
            return CycloNum(compositions_count(k, n));
        if (v == "coprime-compositions")
            return CycloNum(coprime_compositions(k, n));
        if (v == "partitions")
            return CycloNum(partitions_count(k, n));
        if (v == "coprime-partitions")
            return CycloNum(coprime_partitions(k, n));
        throw UsageError("unknown quantity '" + v + "'");
    }

    /// Query flags echoed into JSON records.
    void echo(Json& j) const
    {
        j["k"] = q_.k;
        if (q_.variant == "jordan-mod") {
            j["j"] = *q_.j;
            j["m"] = *q_.m;
        } else if (q_.variant == "jordan-root") {
            j["omega"] = to_json(root_);
        } else if (q_.variant == "jordan-dirichlet") {
            j["m"] = *q_.m;
            j["chi_index"] = *q_.chi_index;
        }
    }

private:
    template <class T>
    void need(const std::optional<T>& x, const char* flag) const
    {
        if (!x)
            throw UsageError(q_.variant + " requires " + flag);
    }

    Query q_;
    RootOfUnity root_;
    const DirichletCharacter* chi_ = nullptr;
};

void add_query_flags(CLI::App* cmd, Query& q, bool for_tabulate)
{
    cmd->add_option("--k", q.k, "Degree or number of parts")->required();
    auto* j = cmd->add_option("--j", q.j, "Residue class (jordan-mod)");
    auto* m = cmd->add_option("--m", q.m, "Modulus (jordan-mod, jordan-dirichlet)");
    auto* w = cmd->add_option("--omega", q.omega, "Root of unity as M/J, meaning exp(2 pi i J/M)");
    auto* c = cmd->add_option("--chi-index", q.chi_index, "Character position in the enumeration mod m");
    if (!for_tabulate) {
        const std::string& v = q.variant;
        if (v == "jordan-mod") {
            j->required();
            m->required();
        }
        if (v == "jordan-root")
            w->required();
        if (v == "jordan-dirichlet") {
            m->required();
            c->required();
        }
    }
}

std::string csv_value(const CycloNum& x)
{
    std::string s = x.to_display_string();
    for (std::size_t pos = 0; (pos = s.find(", ", pos)) != std::string::npos;)
        s.replace(pos, 2, "; ");
    return s;
}

std::string root_label(const RootOfUnity& w)
{
    if (w == RootOfUnity::one())
        return "1";
    if (w == RootOfUnity::minus_one())
        return "-1";
    return w.to_string();
}

std::string polynomial_text(const std::vector<CycloNum>& coeffs)
{
    std::string s;
    for (std::size_t t = coeffs.size(); t-- > 0;) {
        if (coeffs[t].is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + coeffs[t].to_display_string() + ")";
        if (t >= 1)
            s += " n";
        if (t >= 2)
            s += "^" + std::to_string(t);
    }
    return s.empty() ? "0" : s;
}

void print_decomposition_text(std::ostream& out, const BinetDecomposition& d, const CoprimeCombination& c)
{
    out << "k = " << d.k << ", level " << d.level << ", quasi-period " << to_string(quasi_period(d.k)) << "\n";
    out << "p_" << d.k << "(n) = sum over roots w of P_w(n) w^n\n";
    out << "polynomial part: " << polynomial_text(d.terms.front().coeffs) << "\n";
    for (std::size_t i = 1; i < d.terms.size(); ++i) {
        const auto& t = d.terms[i];
        out << "w = " << root_label(t.root.omega) << " (multiplicity " << t.root.multiplicity
            << "): P_w(n) = " << polynomial_text(t.coeffs) << "\n";
    }
    out << "p'_" << c.k << "(n) =\n";
    for (const auto& e : c.entries)
        out << "  + (" << e.coeff.to_display_string() << ") J_(" << e.degree << "," << root_label(e.omega) << ")(n)\n";
}

void print_reports(std::ostream& out, const std::vector<SuiteReport>& reports)
{
    out << std::left << std::setw(12) << "suite" << std::setw(12) << "checks" << "result\n";
    for (const auto& r : reports) {
        out << std::left << std::setw(12) << r.name << std::setw(12) << r.checks << (r.passed() ? "pass" : "FAIL") << "\n";
        if (!r.passed())
            out << "  first counterexample: " << *r.counterexample << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Jordan totients, coprime compositions and partitions into k parts", "copart"};
    app.require_subcommand(1);

    std::function<int()> action;

    // Single-value queries.
    std::vector<Query> queries(variants().size());
    std::string format = "text";
    bool list = false;
    std::uint64_t n_value = 0;
    for (std::size_t i = 0; i < variants().size(); ++i) {
        Query& q = queries[i];
        q.variant = variants()[i];
        auto* cmd = app.add_subcommand(q.variant, "Compute " + q.variant + " at one n");
        add_query_flags(cmd, q, false);
        cmd->add_option("--n", n_value, "Argument")->required();
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        if (q.variant == "partitions" || q.variant == "coprime-partitions")
            cmd->add_flag("--list", list, "Also list the partitions (bounded by COPART_ENUM_CAP)");
        cmd->callback([&, &q = q] {
            action = [&] {
                const Evaluator eval(q);
                const CycloNum v = eval(n_value);
                std::vector<Partition> parts;
                if (list)
                    parts = q.variant == "partitions" ? enumerate_partitions(q.k, n_value)
                                                      : enumerate_coprime_partitions(q.k, n_value);
                if (format == "json") {
                    Json j;
                    j["variant"] = q.variant;
                    eval.echo(j);
                    j["n"] = n_value;
                    j["value"] = v.to_display_string();
                    if (list)
                        j["partitions"] = parts;
                    out << j.dump(2) << "\n";
                } else {
                    out << v.to_display_string() << "\n";
                    for (const auto& p : parts) {
                        for (std::size_t i = 0; i < p.size(); ++i)
                            out << (i ? "+" : "") << p[i];
                        out << "\n";
                    }
                }
                return exit_ok;
            };
        });
    }

    // decompose
    unsigned dec_k = 0, dec_max = 10;
    std::string dec_format = "json";
    auto* dec = app.add_subcommand("decompose", "Binet form of p_k and the coprime combination for p'_k");
    dec->add_option("--k", dec_k, "Number of parts")->required();
    dec->add_option("--max-k", dec_max, "Largest accepted k")->capture_default_str();
    dec->add_option("--format", dec_format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    dec->callback([&] {
        action = [&] {
            if (dec_k < 2 || dec_k > dec_max)
                throw UsageError("--k must lie in [2, " + std::to_string(dec_max) + "]");
            const auto& d = cached_binet(dec_k);
            const auto c = coprime_combination(d);
            if (dec_format == "json")
                out << to_json(d, c).dump(2) << "\n";
            else
                print_decomposition_text(out, d, c);
            return exit_ok;
        };
    });

    // verify
    std::string suite = "all";
    VerifyBounds bounds;
    auto* ver = app.add_subcommand("verify", "Run invariant suites");
    std::vector<std::string> suite_choices{"all"};
    for (const auto& s : suite_names())
        suite_choices.push_back(s);
    ver->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_choices))->capture_default_str();
    ver->add_option("--k-max", bounds.k_max, "Largest k (at most 10)")->capture_default_str();
    ver->add_option("--n-max", bounds.n_max, "Largest n")->capture_default_str();
    ver->callback([&] {
        action = [&] {
            if (bounds.k_max == 0 || bounds.n_max == 0)
                throw UsageError("--k-max and --n-max must be positive");
            if (bounds.k_max > 10)
                throw UsageError("--k-max must be at most 10");
            const auto reports = run_suites(suite, bounds);
            print_reports(out, reports);
            for (const auto& r : reports)
                if (!r.passed())
                    return exit_failure;
            return exit_ok;
        };
    });

    // tabulate
    Query tq;
    std::uint64_t n_from = 1, n_to = 1;
    std::string tab_format = "csv";
    auto* tab = app.add_subcommand("tabulate", "Tabulate a quantity over a range of n");
    tab->add_option("--what", tq.variant, "Quantity")->required()->check(CLI::IsMember(variants()));
    add_query_flags(tab, tq, true);
    tab->add_option("--n-from", n_from, "First n")->required();
    tab->add_option("--n-to", n_to, "Last n")->required();
    tab->add_option("--format", tab_format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    tab->callback([&] {
        action = [&] {
            if (n_from > n_to)
                throw UsageError("--n-from must not exceed --n-to");
            const Evaluator eval(tq);
            if (tab_format == "csv") {
                std::ostringstream buf;
                buf << "n,value\n";
                for (std::uint64_t n = n_from;; ++n) {
                    buf << n << "," << csv_value(eval(n)) << "\n";
                    if (n == n_to)
                        break;
                }
                out << buf.str();
            } else {
                Json j;
                j["what"] = tq.variant;
                eval.echo(j);
                Json rows = Json::array();
                for (std::uint64_t n = n_from;; ++n) {
                    rows.push_back(Json{{"n", n}, {"value", eval(n).to_display_string()}});
                    if (n == n_to)
                        break;
                }
                j["rows"] = std::move(rows);
                out << j.dump(2) << "\n";
            }
            return exit_ok;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

}  // namespace copart::cli
