#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "qeuler/dirichlet.hpp"
#include "qeuler/qeuler.hpp"
#include "qeuler/qzeta.hpp"

using namespace qeuler;

namespace {

constexpr int P = 50;
const Rational half(1, 2);

bool close(const Real& value, const Rational& expected)
{
    return distance(value, expected) <= Real::tolerance(P);
}

bool close(const ComplexReal& a, const ComplexReal& b)
{
    return abs(ComplexReal{a.re - b.re, a.im - b.im}) <= Real::tolerance(P);
}

} // namespace

TEST_CASE("character groups have phi(d) members")
{
    CHECK(characters_mod(1).size() == 1);
    CHECK(characters_mod(3).size() == 2);
    CHECK(characters_mod(9).size() == 6);
    CHECK(characters_mod(15).size() == 8);
    CHECK(characters_mod(45).size() == 24);
    CHECK_THROWS_AS(characters_mod(4), DomainError);
    CHECK_THROWS_AS(characters_mod(0), DomainError);
    CHECK(totient(45) == 24);
    CHECK(totient(1) == 1);
}

TEST_CASE("canonical ordering and the nontrivial character mod 3")
{
    const auto g = characters_mod(3);
    CHECK(g.at(0).is_principal());
    const auto& chi = g.at(1);
    CHECK(chi.order() == 2);
    CHECK(chi.is_real());
    CHECK_FALSE(chi.exponent(0).has_value());
    CHECK(*chi.exponent(1) == 0);
    CHECK(*chi.exponent(2) == 1);
    CHECK(*chi.exponent(-1) == 1);
    CHECK(close(chi.value(2, P).re, Rational(-1)));
    CHECK_THROWS_AS(g.at(2), DomainError);

    // Tuples enumerate lexicographically.
    const auto g15 = characters_mod(15);
    for (std::size_t i = 1; i < g15.size(); ++i)
        CHECK(g15.at(i - 1).index_tuple() < g15.at(i).index_tuple());
}

TEST_CASE("character invariants")
{
    for (unsigned long d : {1UL, 3UL, 5UL, 7UL, 9UL, 15UL, 21UL, 25UL, 27UL, 45UL}) {
        CAPTURE(d);
        const auto g = characters_mod(d);
        CHECK(g.size() == totient(d));
        std::size_t principal = 0;
        for (const auto& chi : g.characters()) {
            principal += chi.is_principal() ? 1 : 0;
            CHECK(totient(d) % chi.order() == 0);
            CHECK(*chi.exponent(1) == 0);
            std::vector<unsigned long> hits(chi.order(), 0);
            for (unsigned long a = 0; a < d; ++a) {
                const auto ea = chi.exponent(static_cast<long>(a));
                CHECK(ea.has_value() == (std::gcd(a, d) == 1));
                if (!ea)
                    continue;
                ++hits[*ea];
                for (unsigned long b = 0; b < d; ++b) {
                    const auto eb = chi.exponent(static_cast<long>(b));
                    if (eb)
                        CHECK(*chi.exponent(static_cast<long>(a * b % d)) == (*ea + *eb) % chi.order());
                }
            }
            // Orthogonality: a nonprincipal character hits every root of unity equally.
            if (!chi.is_principal())
                CHECK(std::all_of(hits.begin(), hits.end(), [&](auto h) { return h == hits[0]; }));
        }
        CHECK(principal == 1);

        // Closure under pointwise product.
        for (const auto& a : g.characters()) {
            for (const auto& b : g.characters()) {
                const auto product = g.multiply(a, b);
                CHECK(std::find(g.characters().begin(), g.characters().end(), product) != g.characters().end());
            }
        }
    }
}

TEST_CASE("orthogonality sums vanish numerically as well")
{
    for (unsigned long d : {5UL, 7UL, 9UL, 15UL}) {
        const auto g = characters_mod(d);
        for (const auto& chi : g.characters()) {
            if (chi.is_principal())
                continue;
            ComplexReal total{Real::zero(P), Real::zero(P)};
            for (unsigned long a = 0; a < d; ++a) {
                const auto v = chi.value(static_cast<long>(a), P);
                total.re += v.re;
                total.im += v.im;
            }
            CHECK(abs(total) <= Real::tolerance(P));
        }
    }
}

TEST_CASE("cyclotomic values")
{
    CyclotomicValue sum_of_roots(3);
    sum_of_roots.add(0, Rational(1));
    sum_of_roots.add(1, Rational(1));
    sum_of_roots.add(2, Rational(1));
    CHECK(sum_of_roots.as_rational() == Rational(0));
    CHECK(sum_of_roots == CyclotomicValue(3));

    CyclotomicValue i4(4);
    i4.add(1, Rational(2));
    i4.add(2, Rational(1, 2));
    const auto g = i4.as_gaussian();
    REQUIRE(g.has_value());
    CHECK(g->first == Rational(-1, 2));
    CHECK(g->second == Rational(2));
    CHECK_FALSE(i4.as_rational().has_value());
    CHECK_FALSE(CyclotomicValue(3).as_gaussian().has_value());

    // -1 written in Q(zeta_2) and Q(zeta_6).
    CyclotomicValue minus_one(2);
    minus_one.add(1, Rational(1));
    CyclotomicValue minus_one6(6);
    minus_one6.add(3, Rational(1));
    CHECK(minus_one == minus_one6);

    const auto w = root_of_unity(1, 6, P);
    CHECK(close(w.re, Rational(1, 2)));
    const auto z = to_complex(i4, P);
    CHECK(close(z.re, Rational(-1, 2)));
    CHECK(close(z.im, Rational(2)));
}

TEST_CASE("generalized q-Euler numbers")
{
    const auto trivial = characters_mod(1).at(0);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(generalized_q_euler(n, trivial, half).as_rational() == q_euler_number(n, QBase::exact(half)));

    const auto chi3 = characters_mod(3).at(1);
    CHECK(generalized_q_euler(0, chi3, half).as_rational() == Rational(-2));
    CHECK(generalized_q_euler(1, chi3, half).as_rational() == Rational(-4, 3));
    CHECK_THROWS_AS(generalized_q_euler(1, chi3, Rational(2)), DomainError);

    // Order-4 characters mod 5 stay exact in Q(i).
    const auto g5 = characters_mod(5);
    for (const auto& chi : g5.characters()) {
        const auto value = generalized_q_euler(3, chi, Rational(1, 3));
        CHECK(value.as_gaussian().has_value());
    }
}

TEST_CASE("q-L-function")
{
    const auto chi3 = characters_mod(3).at(1);
    const auto l1 = l_function(Real(-1L, P), chi3, half);
    CHECK(close(l1.re, Rational(-2, 3)));
    CHECK(close(l1.im, Rational(0)));
    const auto l0 = l_function(Real(0L, P), chi3, half);
    CHECK(close(l0.re, Rational(-1)));
    CHECK(l_function_special_value(1, chi3, half).as_rational() == Rational(-2, 3));

    for (unsigned long d : {3UL, 5UL}) {
        const auto g = characters_mod(d);
        for (const auto& chi : g.characters()) {
            for (const auto& qv : {Rational(1, 3), half}) {
                for (unsigned n = 0; n <= 6; ++n) {
                    CyclotomicValue expected = generalized_q_euler(n, chi, qv);
                    expected *= Rational(1, 2);
                    CHECK(l_function_special_value(n, chi, qv) == expected);
                    CHECK(close(l_function(Real(-static_cast<long>(n), P), chi, qv), to_complex(expected, P)));
                }
            }
        }
    }
}

TEST_CASE("q-L-function for a complex character of order 6")
{
    const auto g7 = characters_mod(7);
    const auto it = std::find_if(g7.characters().begin(), g7.characters().end(),
                                 [](const auto& c) { return c.order() == 6; });
    REQUIRE(it != g7.characters().end());
    for (unsigned n = 1; n <= 3; ++n) {
        CyclotomicValue expected = generalized_q_euler(n, *it, half);
        expected *= Rational(1, 2);
        CHECK(close(l_function(Real(-static_cast<long>(n), P), *it, half), to_complex(expected, P)));
    }
}

TEST_CASE("q-L-function at a non-integer point matches the residue-class decomposition")
{
    // For the real character mod 3: l(s) = H(s,1;3) - H(s,2;3).
    const auto chi3 = characters_mod(3).at(1);
    const Real s(Rational(1, 2), P);
    const auto l = l_function(s, chi3, half);
    const Real expected = partial_zeta_direct(s, 1, 3, half) - partial_zeta_direct(s, 2, 3, half);
    CHECK(distance(l.re, expected) <= Real::tolerance(P));
}
