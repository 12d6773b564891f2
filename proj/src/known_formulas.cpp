#include "copart/known_formulas.hpp"

#include "copart/totient.hpp"

namespace copart {

namespace {

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Rational as_rational(std::uint64_t n) { return Rational(Int(static_cast<unsigned long>(n))); }

int minus_one_power(std::uint64_t n) { return n % 2 == 0 ? 1 : -1; }

void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw domain_error(std::string(what) + ": n must be positive");
}

}  // namespace

Rational p2_closed_form(std::uint64_t n)
{
    const Rational x = as_rational(n);
    return (2 * x - 1) / 4 + q(minus_one_power(n), 4);
}

Rational p3_closed_form(std::uint64_t n)
{
    const Rational x = as_rational(n);
    // w^n + conj(w)^n is 2 when 3 | n and -1 otherwise.
    const long cube = n % 3 == 0 ? 2 : -1;
    return x * x / 12 - q(7, 72) - q(minus_one_power(n), 8) + q(cube, 9);
}

Polynomial<Rational> p4_polynomial_part() { return Polynomial<Rational>({q(-13, 288), q(-1, 32), q(1, 48), q(1, 144)}); }

Rational p4_closed_form(std::uint64_t n)
{
    const Rational x = as_rational(n);
    static const long fourth[4] = {2, 0, -2, 0};
    // w^a - conj(w)^a = i sqrt3 * {0, 1, -1}[a mod 3].
    static const long cube_sign[3] = {0, 1, -1};
    return p4_polynomial_part()(x) + Rational(minus_one_power(n) * (x + 1) / 32) + q(fourth[n % 4], 16) -
           q(cube_sign[(n + 1) % 3], 9);
}

Int coprime_compositions_closed_form(unsigned k, std::uint64_t n)
{
    if (n < 2)
        throw domain_error("closed forms for coprime compositions need n >= 2");
    switch (k) {
    case 2:
        return jordan_totient(1, n);
    case 3: {
        Rational r = Rational(jordan_totient(2, n)) / 2 - Rational(3 * jordan_totient(1, n)) / 2;
        return r.get_num();
    }
    case 4: {
        Rational r = Rational(jordan_totient(3, n)) / 6 - Rational(jordan_totient(2, n)) +
                     Rational(11 * jordan_totient(1, n)) / 6;
        return r.get_num();
    }
    default:
        throw domain_error("closed forms for coprime compositions are available for k = 2, 3, 4");
    }
}

Rational minus_one_pair_table(std::uint64_t n)
{
    require_positive(n, "minus_one_pair_table");
    const Rational phi = as_rational(euler_phi(n));
    Rational v;
    if (n == 1)
        v = -2;
    else if (n == 2)
        v = 5;
    else if (n % 2 == 1)
        v = -phi;
    else if (n % 4 == 2)
        v = 3 * phi;
    else
        v = phi;
    return v / 32;
}

Rational fourth_root_pair_table(std::uint64_t n)
{
    require_positive(n, "fourth_root_pair_table");
    if (n == 2)
        return q(-2, 16);
    if (n == 4)
        return q(4, 16);
    return 0;
}

Rational cube_root_pair_table(std::uint64_t n)
{
    require_positive(n, "cube_root_pair_table");
    if (n == 1)
        return q(1, 9);
    if (n == 3)
        return q(-2, 9);
    std::uint64_t m1 = n;
    unsigned b = 0;
    while (m1 % 3 == 0) {
        m1 /= 3;
        ++b;
    }
    if (b >= 2)
        return 0;
    for (const auto& pp : factorize(m1))
        if (pp.prime % 3 == 1)
            return 0;
    const int sign = big_omega(n) % 2 == 0 ? 1 : -1;
    // m1 > 1 here, so the power of two is integral.
    Rational r(Int(sign * ipow(2, small_omega(m1) - 1)), Int(9));
    r.canonicalize();
    return r;
}

}  // namespace copart
