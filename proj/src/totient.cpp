#include "copart/totient.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace copart {

namespace {

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw domain_error(std::string(what) + ": n must be positive");
}

struct MobiusTerm {
    std::uint64_t d;
    int mu;  // mu(n/d), never zero
};

// Divisors d of n with n/d squarefree, i.e. the support of d -> mu(n/d).
std::vector<MobiusTerm> mobius_support(std::uint64_t n)
{
    const auto f = factorize(n);
    std::vector<MobiusTerm> out{{n, 1}};
    for (const auto& pe : f) {
        const std::size_t base = out.size();
        for (std::size_t i = 0; i < base; ++i)
            out.push_back({out[i].d / pe.prime, -out[i].mu});
    }
    return out;
}

std::uint64_t valuation(std::uint64_t& n, std::uint64_t p)
{
    std::uint64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool has_prime_factor_mod(std::uint64_t m, std::uint64_t modulus, std::uint64_t residue)
{
    for (const auto& pe : factorize(m))
        if (pe.prime % modulus == residue)
            return true;
    return false;
}

Int signed_power_of_two(unsigned omega_exponent, unsigned big_omega_value)
{
    Int v = ipow(2, omega_exponent);
    return big_omega_value % 2 ? Int(-v) : v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classic and modulo totients

Int jordan_totient(unsigned k, std::uint64_t n)
{
    require_positive(n, "jordan_totient");
    if (k == 0)
        return n == 1 ? 1 : 0;
    // n^k prod (1 - p^{-k}) = prod p^{k(c-1)} (p^k - 1)
    Int out = 1;
    for (const auto& [p, c] : factorize(n)) {
        Int pk = ipow(p, k);
        out *= ipow(p, k * (c - 1)) * (pk - 1);
    }
    return out;
}

Int jordan_totient_by_divisors(unsigned k, std::uint64_t n)
{
    require_positive(n, "jordan_totient");
    Int out = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu != 0)
            out += mu * ipow(d, k);
    }
    return out;
}

Int jordan_mod_totient(unsigned k, std::uint64_t j, std::uint64_t m, std::uint64_t n)
{
    require_positive(n, "jordan_mod_totient");
    if (m == 0 || j >= m)
        throw domain_error("jordan_mod_totient: requires 0 <= j < m");
    Int out = 0;
    for (const auto& [d, mu] : mobius_support(n))
        if (d % m == j)
            out += mu * ipow(d, k);
    return out;
}

// ---------------------------------------------------------------------------
// Root totients

CycloNum jordan_root_totient(unsigned k, const RootOfUnity& w, std::uint64_t n)
{
    require_positive(n, "jordan_root_totient");
    const std::uint64_t L = w.order();
    CycloAccumulator acc(L);
    for (const auto& [d, mu] : mobius_support(n))
        acc.add(w.pow(d), Int(mu * ipow(d, k)));
    return acc.value();
}

CycloNum split_root_into_modulo(unsigned k, const RootOfUnity& w, std::uint64_t n)
{
    require_positive(n, "split_root_into_modulo");
    const std::uint64_t m = w.order();
    CycloNum out(Rational(0), m);
    for (std::uint64_t j = 0; j < m; ++j) {
        Int part = jordan_mod_totient(k, j, m, n);
        if (sgn(part) != 0)
            out += embed(w.pow(j), m) * CycloNum(part);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dirichlet characters

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<CharacterValue> table)
    : modulus_(modulus), table_(std::move(table)), level_(1)
{
    if (modulus_ == 0 || table_.size() != modulus_)
        throw domain_error("Dirichlet character table must have one entry per residue");
    for (const auto& v : table_)
        if (v)
            level_ = std::lcm(level_, v->order());
}

bool DirichletCharacter::is_principal() const
{
    for (const auto& v : table_)
        if (v && *v != RootOfUnity::one())
            return false;
    return true;
}

DirichletCharacter DirichletCharacter::conjugate() const
{
    std::vector<CharacterValue> t;
    t.reserve(table_.size());
    for (const auto& v : table_)
        t.push_back(v ? CharacterValue(v->conjugate()) : std::nullopt);
    return {modulus_, std::move(t)};
}

CycloNum character_value(const CharacterValue& v, std::uint64_t level)
{
    if (!v)
        return CycloNum(Rational(0), level);
    return embed(*v, level);
}

namespace {

struct UnitGenerator {
    std::uint64_t prime_power;
    std::uint64_t generator;  // residue mod prime_power
    std::uint64_t order;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t primitive_root_prime_power(std::uint64_t p, unsigned a)
{
    const auto f = factorize(p - 1);
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (const auto& pe : f)
            if (powmod(g, (p - 1) / pe.prime, p) == 1)
                ok = false;
        if (ok)
            break;
    }
    if (a >= 2 && powmod(g, p - 1, p * p) == 1)
        g += p;
    return g;
}

std::vector<UnitGenerator> unit_generators(std::uint64_t m)
{
    std::vector<UnitGenerator> gens;
    for (const auto& [p, a] : factorize(m)) {
        const std::uint64_t q = ipow(p, a).get_ui();
        if (p == 2) {
            if (a == 2)
                gens.push_back({q, q - 1, 2});
            else if (a >= 3) {
                gens.push_back({q, q - 1, 2});
                gens.push_back({q, 5, q / 4});
            }
        } else {
            gens.push_back({q, primitive_root_prime_power(p, a), q / p * (p - 1)});
        }
    }
    return gens;
}

std::vector<DirichletCharacter> build_characters(std::uint64_t m)
{
    const auto gens = unit_generators(m);
    const std::size_t r = gens.size();

    // Discrete logs per prime power: residue mod q -> exponents of that
    // prime power's generators, found by walking all generator products.
    std::vector<std::pair<std::uint64_t, std::map<std::uint64_t, std::vector<std::uint64_t>>>> local_logs;
    for (std::size_t first = 0; first < r;) {
        const std::uint64_t q = gens[first].prime_power;
        std::size_t last = first;
        while (last < r && gens[last].prime_power == q)
            ++last;
        auto& table = local_logs.emplace_back(q, std::map<std::uint64_t, std::vector<std::uint64_t>>{}).second;
        std::vector<std::uint64_t> e(last - first, 0);
        for (bool more = true; more;) {
            std::uint64_t x = 1 % q;
            for (std::size_t i = first; i < last; ++i)
                x = mulmod(x, powmod(gens[i].generator, e[i - first], q), q);
            table[x] = e;
            more = false;
            for (std::size_t i = e.size(); i-- > 0;) {
                if (++e[i] < gens[first + i].order) {
                    more = true;
                    break;
                }
                e[i] = 0;
            }
        }
        first = last;
    }

    std::vector<std::vector<std::uint64_t>> logs(m);
    for (std::uint64_t x = 0; x < m; ++x) {
        if (std::gcd(x, m) != 1)
            continue;
        for (const auto& [q, table] : local_logs) {
            const auto& part = table.at(x % q);
            logs[x].insert(logs[x].end(), part.begin(), part.end());
        }
    }

    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> t(r, 0);
    for (;;) {
        std::vector<CharacterValue> table(m);
        for (std::uint64_t x = 0; x < m; ++x) {
            if (std::gcd(x, m) != 1)
                continue;
            RootOfUnity v;
            for (std::size_t i = 0; i < r; ++i)
                v = v * RootOfUnity(gens[i].order, t[i] * logs[x][i]);
            table[x] = v;
        }
        out.emplace_back(m, std::move(table));
        std::size_t i = r;
        bool done = true;
        while (i > 0) {
            --i;
            if (++t[i] < gens[i].order) {
                done = false;
                break;
            }
            t[i] = 0;
        }
        if (done)
            break;
    }
    return out;
}

}  // namespace

const std::vector<DirichletCharacter>& enumerate_characters(std::uint64_t m)
{
    if (m == 0)
        throw domain_error("enumerate_characters: modulus must be positive");
    // The full table set holds phi(m) * m values.
    if (m > 4096)
        throw resource_error("enumerate_characters: modulus " + std::to_string(m) + " exceeds 4096");
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<const std::vector<DirichletCharacter>>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end())
            return *it->second;
    }
    auto built = std::make_unique<const std::vector<DirichletCharacter>>(build_characters(m));
    std::lock_guard lock(mu);
    return *cache.emplace(m, std::move(built)).first->second;
}

// ---------------------------------------------------------------------------
// Jordan-Dirichlet totients

CycloNum jordan_dirichlet(unsigned k, const DirichletCharacter& chi, std::uint64_t n)
{
    require_positive(n, "jordan_dirichlet");
    const std::uint64_t L = chi.value_level();
    CycloNum out(Rational(ipow(n, k)), L);
    for (const auto& [p, c] : factorize(n)) {
        const CharacterValue& v = chi(p);
        const CycloNum chi_p = character_value(v, L);
        // chi(p)^{c-1} with 0^0 = 1
        CycloNum lead = v ? embed(v->pow(c - 1), L) : CycloNum(Rational(c == 1 ? 1 : 0), L);
        Rational inv_pk(Int(1), ipow(p, k));
        inv_pk.canonicalize();
        out *= lead * (chi_p - CycloNum(inv_pk, L));
    }
    return out;
}

CycloNum jordan_dirichlet_by_divisors(unsigned k, const DirichletCharacter& chi, std::uint64_t n)
{
    require_positive(n, "jordan_dirichlet");
    const std::uint64_t L = chi.value_level();
    CycloAccumulator acc(L);
    for (std::uint64_t d : divisors(n)) {
        const int mu = mobius(n / d);
        const auto& v = chi(d);
        if (mu == 0 || !v)
            continue;
        acc.add(*v, Int(mu * ipow(d, k)));
    }
    return acc.value();
}

CycloNum jordan_dirichlet_coprime(unsigned k, const DirichletCharacter& chi, std::uint64_t n)
{
    require_positive(n, "jordan_dirichlet");
    if (std::gcd(n, chi.modulus()) != 1)
        throw precondition_error("jordan_dirichlet_coprime: n must be coprime to the modulus");
    const std::uint64_t L = chi.value_level();
    CycloNum out = embed(*chi(n), L);
    out *= Rational(ipow(n, k));
    for (const auto& pe : factorize(n)) {
        // 1 - conj(chi(p)) / p^k
        Rational inv_pk(Int(1), ipow(pe.prime, k));
        inv_pk.canonicalize();
        CycloNum term = embed(chi(pe.prime)->conjugate(), L);
        term *= inv_pk;
        out *= CycloNum(Rational(1), L) - term;
    }
    return out;
}

CycloNum jordan_dirichlet_from_modulo(unsigned k, const DirichletCharacter& chi, std::uint64_t n)
{
    require_positive(n, "jordan_dirichlet");
    const std::uint64_t m = chi.modulus();
    const std::uint64_t L = chi.value_level();
    CycloAccumulator acc(L);
    for (std::uint64_t j = 0; j < m; ++j) {
        const auto& v = chi(j);
        if (!v)
            continue;
        acc.add(*v, jordan_mod_totient(k, j, m, n));
    }
    return acc.value();
}

CycloNum modulo_from_characters(unsigned k, std::uint64_t j, std::uint64_t m, std::uint64_t n)
{
    require_positive(n, "modulo_from_characters");
    if (m == 0 || j >= m)
        throw domain_error("modulo_from_characters: requires 0 <= j < m");
    if (std::gcd(j, m) != 1)
        throw precondition_error("modulo_from_characters: requires gcd(j, m) = 1");
    const auto& chars = enumerate_characters(m);
    CycloNum sum;
    for (const auto& chi : chars) {
        const CycloNum weight = embed(chi(j)->conjugate(), chi.value_level());
        sum += weight * jordan_dirichlet(k, chi, n);
    }
    sum *= Rational(Int(1), Int(static_cast<unsigned long>(chars.size())));
    return sum;
}

Int reduce_gcd_case(unsigned k, std::uint64_t j, std::uint64_t m, std::uint64_t n)
{
    require_positive(n, "reduce_gcd_case");
    if (m == 0 || j >= m)
        throw domain_error("reduce_gcd_case: requires 0 <= j < m");
    const std::uint64_t s = std::gcd(j, m);
    if (s == 1)
        throw precondition_error("reduce_gcd_case: requires gcd(j, m) > 1");
    if (n % s != 0)
        return 0;
    const auto reduced = modulo_from_characters(k, j / s, m / s, n / s).as_rational();
    if (!reduced || reduced->get_den() != 1)
        throw consistency_error("reduce_gcd_case: character reconstruction is not an integer");
    return ipow(s, k) * reduced->get_num();
}

// ---------------------------------------------------------------------------
// Closed forms

Int closed_form_mod3_degree0(std::uint64_t n)
{
    require_positive(n, "closed_form_mod3_degree0");
    if (n == 1)
        return 1;
    if (n == 3)
        return -1;
    std::uint64_t m1 = n;
    const auto b = valuation(m1, 3);
    if (has_prime_factor_mod(m1, 3, 1))
        return 0;
    if (b >= 2)
        return 0;
    return signed_power_of_two(small_omega(m1) - 1, big_omega(n));
}

RootOfUnity closed_form_root(ClosedFormCase c, unsigned power)
{
    switch (c) {
    case ClosedFormCase::minus_one_degree0:
    case ClosedFormCase::minus_one_degree1:
        if (power != 1)
            throw domain_error("closed form at -1 takes power 1");
        return RootOfUnity::minus_one();
    case ClosedFormCase::fourth_root_degree0:
        if (power != 1 && power != 3)
            throw domain_error("closed form at i^p needs p in {1, 3}");
        return {4, power};
    case ClosedFormCase::cube_root_degree0:
        if (power != 1 && power != 2)
            throw domain_error("closed form at w^p needs p in {1, 2}");
        return {3, power};
    }
    throw domain_error("unknown closed form case");
}

unsigned closed_form_degree(ClosedFormCase c) { return c == ClosedFormCase::minus_one_degree1 ? 1 : 0; }

CycloNum closed_form_root_totient(ClosedFormCase c, unsigned power, std::uint64_t n)
{
    require_positive(n, "closed_form_root_totient");
    const RootOfUnity w = closed_form_root(c, power);
    const std::uint64_t L = w.order();
    auto rational = [L](const Int& v) { return CycloNum(Rational(v), L); };

    switch (c) {
    case ClosedFormCase::minus_one_degree0:
        if (n == 1)
            return rational(-1);
        if (n == 2)
            return rational(2);
        return rational(0);

    case ClosedFormCase::minus_one_degree1: {
        std::uint64_t m = n;
        const auto a = valuation(m, 2);
        const Int phi(static_cast<unsigned long>(euler_phi(n)));
        if (a == 0)
            return rational(-phi);
        if (a == 1)
            return rational(3 * phi);
        return rational(phi);
    }

    case ClosedFormCase::fourth_root_degree0: {
        const CycloNum ip = embed(w, L);
        if (n == 1)
            return ip;
        if (n == 2)
            return rational(-1) - ip;
        std::uint64_t m = n;
        const auto a = valuation(m, 2);
        if (has_prime_factor_mod(m, 4, 1))
            return rational(0);
        if (n == 4)
            return rational(2);
        if (a >= 3 || (a == 2 && m > 1))
            return rational(0);
        return ip * rational(signed_power_of_two(small_omega(m), big_omega(n)));
    }

    case ClosedFormCase::cube_root_degree0: {
        const CycloNum wp = embed(w, L);
        if (n == 1)
            return wp;
        if (n == 3)
            return rational(1) - wp;
        std::uint64_t m1 = n;
        const auto b = valuation(m1, 3);
        if (has_prime_factor_mod(m1, 3, 1))
            return rational(0);
        if (b >= 2)
            return rational(0);
        const CycloNum diff = wp - embed(w.pow(2), L);
        return diff * rational(signed_power_of_two(small_omega(m1) - 1, big_omega(n)));
    }
    }
    throw domain_error("unknown closed form case");
}

}  // namespace copart
