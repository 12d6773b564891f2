#include "copart/serialize.hpp"

#include <string>

namespace copart {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw domain_error(std::string("JSON: missing field '") + key + "'");
    return j.at(key);
}

std::uint64_t unsigned_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw domain_error(std::string("JSON: field '") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

const Json& array_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_array())
        throw domain_error(std::string("JSON: field '") + key + "' must be an array");
    return v;
}

}  // namespace

Json to_json(const CycloNum& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coefficients())
        coeffs.push_back(to_string(c));
    return Json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const CycloNum& x, std::uint64_t level) { return to_json(x.lifted(level)); }

Json to_json(const RootOfUnity& w) { return Json{{"m", w.order()}, {"j", w.exponent()}}; }

CycloNum cyclo_from_json(const Json& j)
{
    const std::uint64_t level = unsigned_field(j, "level");
    if (level == 0)
        throw domain_error("JSON: cyclotomic level must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : array_field(j, "coeffs")) {
        if (!c.is_string())
            throw domain_error("JSON: cyclotomic coefficients must be strings");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return CycloNum::from_coefficients(level, std::move(coeffs));
}

RootOfUnity root_from_json(const Json& j)
{
    const std::uint64_t m = unsigned_field(j, "m");
    const std::uint64_t e = unsigned_field(j, "j");
    if (m == 0)
        throw domain_error("JSON: root of unity order must be positive");
    return RootOfUnity(m, e);
}

Json to_json(const BinetDecomposition& d, const CoprimeCombination& c)
{
    Json binet = Json::array();
    for (const auto& term : d.terms) {
        Json coeffs = Json::array();
        for (const auto& u : term.coeffs)
            coeffs.push_back(to_json(u, d.level));
        binet.push_back(Json{{"omega", to_json(term.root.omega)},
                             {"multiplicity", term.root.multiplicity},
                             {"coeffs", std::move(coeffs)}});
    }
    Json combination = Json::array();
    for (const auto& e : c.entries)
        combination.push_back(Json{{"degree", e.degree}, {"omega", to_json(e.omega)}, {"coeff", to_json(e.coeff, d.level)}});
    return Json{{"k", d.k}, {"level", d.level}, {"binet", std::move(binet)}, {"coprime_combination", std::move(combination)}};
}

DecompositionDocument decomposition_from_json(const Json& j)
{
    DecompositionDocument doc;
    doc.binet.k = static_cast<unsigned>(unsigned_field(j, "k"));
    doc.binet.level = unsigned_field(j, "level");
    doc.combination.k = doc.binet.k;
    for (const auto& t : array_field(j, "binet")) {
        BinetTerm term;
        term.root.omega = root_from_json(field(t, "omega"));
        term.root.multiplicity = static_cast<unsigned>(unsigned_field(t, "multiplicity"));
        for (const auto& u : array_field(t, "coeffs"))
            term.coeffs.push_back(cyclo_from_json(u));
        if (term.root.multiplicity == 0 || term.coeffs.size() != term.root.multiplicity)
            throw domain_error("JSON: Binet term needs one coefficient per unit of multiplicity");
        doc.binet.terms.push_back(std::move(term));
    }
    for (const auto& e : array_field(j, "coprime_combination")) {
        CombinationEntry entry;
        entry.degree = static_cast<unsigned>(unsigned_field(e, "degree"));
        entry.omega = root_from_json(field(e, "omega"));
        entry.coeff = cyclo_from_json(field(e, "coeff"));
        doc.combination.entries.push_back(std::move(entry));
    }
    return doc;
}

bool equivalent(const BinetDecomposition& a, const BinetDecomposition& b)
{
    if (a.k != b.k || a.level != b.level || a.terms.size() != b.terms.size())
        return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& x = a.terms[i];
        const auto& y = b.terms[i];
        if (!(x.root == y.root) || x.coeffs.size() != y.coeffs.size())
            return false;
        for (std::size_t t = 0; t < x.coeffs.size(); ++t)
            if (!(x.coeffs[t] == y.coeffs[t]))
                return false;
    }
    return true;
}

bool equivalent(const CoprimeCombination& a, const CoprimeCombination& b)
{
    if (a.k != b.k || a.entries.size() != b.entries.size())
        return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.degree != y.degree || !(x.omega == y.omega) || !(x.coeff == y.coeff))
            return false;
    }
    return true;
}

}  // namespace copart
