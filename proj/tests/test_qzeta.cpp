#include "doctest.h"

#include "qeuler/qeuler.hpp"
#include "qeuler/qzeta.hpp"

using namespace qeuler;

namespace {

constexpr int P = 50;

Rational q(long n, long d = 1)
{
    return Rational(n, d);
}

bool close(const Real& value, const Rational& expected, int digits = P)
{
    return distance(value, expected) <= Real::tolerance(digits);
}

bool close(const Real& a, const Real& b, int digits = P)
{
    return distance(a, b) <= Real::tolerance(digits);
}

Real real(const char* decimal)
{
    return Real(Rational::parse(decimal), 60);
}

// Abel sum of (-1)^a sum_n (-1)^n [a+nF]_q^n, expanding [m]_q^n binomially
// and summing the geometric series in q^(nF) termwise.
Rational residue_class_abel(unsigned n, unsigned long a, unsigned long f, const Rational& qv)
{
    Rational acc;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational term = Rational(binom(n, k)) * pow(qv, static_cast<long>(a * k)) /
                              (Rational(1) + pow(qv, static_cast<long>(f * k)));
        acc += (k % 2 == 0) ? term : -term;
    }
    acc /= pow(Rational(1) - qv, n);
    return a % 2 == 0 ? acc : -acc;
}

} // namespace

TEST_CASE("zeta query validation")
{
    CHECK_THROWS_AS(ZetaQuery::make(q(1), q(1), q(3, 2)), DomainError);
    CHECK_THROWS_AS(ZetaQuery::make(q(1), q(0), q(1, 2)), DomainError);
    CHECK_THROWS_AS(ZetaQuery::make(q(1), q(-1), q(1, 2)), DomainError);
    CHECK_THROWS_AS(ZetaQuery::make(q(1), q(1), q(1, 2), 10), DomainError);
    CHECK_NOTHROW(ZetaQuery::make(q(1), q(1), q(1, 2), 15));
}

TEST_CASE("zeta at non-positive integers")
{
    CHECK(close(zeta(ZetaQuery::make(q(0), q(1), q(1, 2))), q(1, 2)));
    CHECK(close(zeta(ZetaQuery::make(q(-1), q(1), q(1, 2))), q(1, 3)));
    CHECK(close(zeta(ZetaQuery::make(q(-2), q(2), q(1, 2))), q(13, 15)));
    CHECK(close(zeta(ZetaQuery::make(q(-2), q(3), q(1, 2))), q(83, 60)));
}

TEST_CASE("zeta agrees with an independently summed reference")
{
    // References: c/2 + sum_n (-1)^n (a_n - c), c = (1-q)^s, summed at 80 digits.
    CHECK(close(zeta(ZetaQuery::make(q(2), q(1), q(1, 2))),
                real("0.733672621242012136935479836570941692517206255992352022729146")));
    CHECK(close(zeta(ZetaQuery::make(q(1, 2), q(7, 2), q(4, 5))),
                real("0.317629411394762539634030152773584530830395548129821172452855")));
    CHECK(close(zeta(ZetaQuery::make(q(-1, 2), q(1, 2), q(1, 5))),
                real("0.315031161895103813949782074171087983406356589353670735120073")));
    CHECK(close(zeta_euler_transform(ZetaQuery::make(q(1), q(2), q(1, 2))),
                real("0.367750109825777895404340126372250758721151500571237186716881")));
}

TEST_CASE("euler transform route")
{
    CHECK(close(zeta_euler_transform(ZetaQuery::make(q(-1), q(1), q(1, 2))), q(1, 3)));
    CHECK(close(zeta_euler_transform(ZetaQuery::make(q(0), q(5), q(1, 3))), q(1, 2)));
    const auto zq = ZetaQuery::make(q(2), q(1), q(1, 2));
    CHECK(close(zeta_euler_transform(zq), zeta(zq)));
}

TEST_CASE("dual-route agreement over the grid")
{
    for (const auto& qv : {q(1, 5), q(1, 2), q(4, 5)}) {
        for (const auto& s : {q(-3), q(-2), q(-1), q(-1, 2), q(0), q(1, 2), q(1), q(2)}) {
            for (const auto& x : {q(1, 2), q(1), q(2), q(7, 2)}) {
                const auto zq = ZetaQuery::make(s, x, qv);
                CAPTURE(s.to_string());
                CAPTURE(x.to_string());
                CAPTURE(qv.to_string());
                CHECK(close(zeta(zq), zeta_euler_transform(zq)));
            }
        }
    }
}

TEST_CASE("higher precision tightens the certified bound")
{
    const auto zq = ZetaQuery::make(q(3, 2), q(1), q(1, 2), 120);
    const Real a = zeta(zq);
    const Real b = zeta_euler_transform(zq);
    CHECK(a.digits() == 120);
    CHECK(close(a, b, 120));
}

TEST_CASE("interpolation at negative integers")
{
    const auto c1 = interpolate_check(1, 1, q(1, 2));
    CHECK(c1.exact == q(1, 3));
    CHECK(c1.agrees);
    const auto c0 = interpolate_check(0, 3, q(1, 2));
    CHECK(c0.exact == q(1, 2));
    CHECK(c0.agrees);
    const auto c2 = interpolate_check(2, 3, q(1, 2));
    CHECK(c2.exact == q(83, 60));
    CHECK(c2.agrees);
    CHECK_THROWS_AS(interpolate_check(1, 0, q(1, 2)), DomainError);

    for (const auto& qv : {q(1, 3), q(1, 2), q(2, 3)}) {
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned long x = 1; x <= 5; ++x)
                CHECK(interpolate_check(n, x, qv).agrees);
        }
    }
}

TEST_CASE("continuation coefficients at s = -n reproduce the finite sum")
{
    for (long n = 0; n <= 8; ++n) {
        const Real s(-n, P);
        for (unsigned long k = 0; k <= static_cast<unsigned long>(n) + 5; ++k) {
            const Rational expected = k <= static_cast<unsigned long>(n)
                                          ? Rational(binom(static_cast<unsigned long>(n), k)) * alt_sign(static_cast<long>(k))
                                          : Rational();
            CHECK(close(gen_binom(s, k), expected));
        }
    }
}

TEST_CASE("partial zeta")
{
    const Rational half = q(1, 2);
    CHECK(partial_zeta_special_value(1, 1, 3, half) == q(-1, 9));
    CHECK(partial_zeta_special_value(1, 2, 3, half) == q(5, 9));
    CHECK(partial_zeta_special_value(2, 1, 3, half) == q(334, 585));
    CHECK(partial_zeta_special_value(2, 2, 3, half) == q(274, 585));

    CHECK(close(partial_zeta(Real(-1L, P), 1, 3, half), q(-1, 9)));
    CHECK(close(partial_zeta(Real(-1L, P), 2, 3, half), q(5, 9)));
    CHECK(close(partial_zeta(Real(-2L, P), 1, 3, half), q(334, 585)));

    CHECK_THROWS_AS(partial_zeta(Real(-1L, P), 1, 4, half), DomainError);
    CHECK_THROWS_AS(partial_zeta(Real(-1L, P), 0, 3, half), DomainError);
    CHECK_THROWS_AS(partial_zeta(Real(-1L, P), 3, 3, half), DomainError);
    CHECK_THROWS_AS(partial_zeta(Real(-1L, P), 1, 1, half), DomainError);
    CHECK_THROWS_AS(partial_zeta_special_value(1, 1, 3, q(2)), DomainError);

    for (const auto& qv : {q(1, 3), q(1, 2)}) {
        for (unsigned long f : {3UL, 5UL}) {
            for (unsigned long a = 1; a < f; ++a) {
                for (unsigned n = 1; n <= 6; ++n) {
                    const Rational special = partial_zeta_special_value(n, a, f, qv);
                    CHECK(special == residue_class_abel(n, a, f, qv));
                    CHECK(close(partial_zeta(Real(-static_cast<long>(n), P), a, f, qv), special));
                }
            }
        }
    }
}

TEST_CASE("partial zeta: closed form versus direct residue-class series")
{
    for (const auto& s : {q(-2), q(-1, 2), q(1, 2), q(2)}) {
        for (unsigned long a : {1UL, 2UL, 4UL}) {
            const Real sr(s, P);
            CHECK(close(partial_zeta(sr, a, 5, q(1, 2)), partial_zeta_direct(sr, a, 5, q(1, 2))));
        }
    }
}

TEST_CASE("partial zeta classes add up to the full alternating series")
{
    // sum over a = 1..F of the classes m = a + nF is sum_{m>=1} (-1)^m / [m]^s = -zeta(s, 1).
    const Real s(q(3, 2), P);
    const QBase base = QBase::zeta(q(1, 3));
    Real total = Real::zero(P);
    for (unsigned long a = 1; a <= 3; ++a)
        total += detail::residue_class_zeta(s, a, 3, base, P);
    CHECK(close(total, -zeta(ZetaQuery::make(s, Real(1L, P), q(1, 3), P))));
}
