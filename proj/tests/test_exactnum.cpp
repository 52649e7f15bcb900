#include "doctest.h"

#include <random>

#include "qeuler/exactnum.hpp"

using namespace qeuler;

namespace {

Rational q(long n, long d = 1)
{
    return Rational(n, d);
}

bool within(const Real& value, const Rational& expected, int tolerance_digits)
{
    return distance(value, expected) <= Real::tolerance(tolerance_digits + 10);
}

} // namespace

TEST_CASE("rational invariants")
{
    CHECK(q(6, 4).to_string() == "3/2");
    CHECK(q(-6, -4).to_string() == "3/2");
    CHECK(q(3, -6).to_string() == "-1/2");
    CHECK(q(6).to_string() == "6/1");
    CHECK(Rational().to_string() == "0/1");
    CHECK(q(0, -5).to_string() == "0/1");
    CHECK_THROWS_AS(q(1, 0), DomainError);
    CHECK_THROWS_AS(q(1) / Rational(), DomainError);
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(1, 3) * q(3, 7) == q(1, 7));
    CHECK(q(-1, 3) < q(-1, 4));
}

TEST_CASE("rational parsing")
{
    CHECK(Rational::parse("1/2") == q(1, 2));
    CHECK(Rational::parse(" -4/6 ") == q(-2, 3));
    CHECK(Rational::parse("7") == q(7));
    CHECK(Rational::parse("0.125") == q(1, 8));
    CHECK(Rational::parse("-.5") == q(-1, 2));
    CHECK(Rational::parse("2.5e-3") == q(1, 400));
    CHECK(Rational::parse("1e3") == q(1000));
    CHECK(Rational::parse("1.23e-65") == Rational(BigInt(123), BigInt("1" + std::string(67, '0'))));
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("."), DomainError);
}

TEST_CASE("binom")
{
    CHECK(binom(4, 2) == 6);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(10, 4) == 210);
    CHECK(binom(3, 5) == 0);

    // Pascal's rule.
    for (unsigned long n = 1; n <= 30; ++n) {
        for (unsigned long k = 1; k <= n; ++k)
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
}

TEST_CASE("rat_pow")
{
    CHECK(rat_pow(q(1, 8), q(1, 3)) == q(1, 2));
    CHECK(rat_pow(q(1, 2), q(-2)) == q(4));
    CHECK(rat_pow(q(4, 9), q(3, 2)) == q(8, 27));
    CHECK(rat_pow(q(5, 7), q(0)) == q(1));
    CHECK_THROWS_AS(rat_pow(q(1, 2), q(1, 2)), NotExactPower);
    CHECK_THROWS_AS(rat_pow(q(4, 3), q(1, 2)), NotExactPower); // numerator exact, denominator not
    CHECK_THROWS_AS(rat_pow(q(-1, 8), q(1, 3)), DomainError);
    CHECK_THROWS_AS(rat_pow(q(0), q(2)), DomainError);
}

TEST_CASE("rat_pow success implies the defining power identity")
{
    std::mt19937 rng(20240417);
    std::uniform_int_distribution<long> small(1, 6);
    std::uniform_int_distribution<long> expo(-4, 4);
    int successes = 0;
    for (int i = 0; i < 300; ++i) {
        // Perfect powers half of the time, arbitrary bases otherwise.
        const long f = small(rng);
        const long a = expo(rng);
        Rational base = q(small(rng), small(rng));
        if (i % 2 == 0)
            base = pow(base, f);
        const Rational r(a, f);
        try {
            const Rational root = rat_pow(base, r);
            ++successes;
            CHECK(pow(root, r.den().get_si()) == pow(base, r.num().get_si()));
            // real_pow agrees wherever rat_pow succeeds.
            const Real approx = real_pow(Real(base, 50), Real(r, 50));
            CHECK(within(approx, root, 40));
        } catch (const NotExactPower&) {
        }
    }
    CHECK(successes > 100);
}

TEST_CASE("gen_binom")
{
    CHECK(within(gen_binom(Real(2L, 50), 3), q(4), 40));
    CHECK(gen_binom(Real(-2L, 50), 3).is_zero());
    CHECK(within(gen_binom(Real(-2L, 50), 1), q(-2), 40));
    CHECK(within(gen_binom(Real(q(1, 2), 50), 2), q(3, 8), 40)); // (1/2)(3/2)/2

    for (long m = 0; m <= 12; ++m) {
        for (unsigned long k = 0; k <= 40; ++k) {
            const Rational expected = k <= static_cast<unsigned long>(m)
                                          ? Rational(binom(static_cast<unsigned long>(m), k)) * alt_sign(static_cast<long>(k))
                                          : Rational();
            CHECK(within(gen_binom(Real(-m, 50), k), expected, 40));
        }
    }
}

TEST_CASE("real_pow")
{
    CHECK(within(real_pow(Real(4L, 50), Real(q(1, 2), 50)), q(2), 40));
    const Real one = real_pow(Real(q(1, 2), 50), Real(0L, 50));
    CHECK(one == Real(1L, 50));
    CHECK(within(real_pow(Real(q(1, 8), 50), Real(q(1, 3), 50)), q(1, 2), 40));
    CHECK_THROWS_AS(real_pow(Real(-2L, 50), Real(1L, 50)), DomainError);
    CHECK_THROWS_AS(real_pow(Real(0L, 50), Real(1L, 50)), DomainError);
}

TEST_CASE("real precision contract")
{
    const Real third(q(1, 3), 50);
    CHECK(third.digits() == 50);
    CHECK(third.bits() >= digits_to_bits(70));
    CHECK(third.to_string() == "0." + std::string(50, '3'));
    CHECK((-third).to_string() == "-0." + std::string(50, '3'));
    CHECK(Real(q(1, 2), 20).to_string() == "0.50000000000000000000");
    CHECK(Real(q(123, 1), 5).to_string() == "123.00");
    CHECK(Real(0L, 50).to_string() == "0");
    CHECK(Real(q(1, 8), 15).to_string(3) == "0.125");

    const Real tol = Real::tolerance(50);
    CHECK(within(tol, Rational(BigInt(1), BigInt("1" + std::string(40, '0'))), 60));

    // Mixed precision arithmetic widens to the larger operand.
    const Real sum = Real(1L, 20) + Real(1L, 80);
    CHECK(sum.digits() == 80);
    CHECK(sum.bits() == Real(1L, 80).bits());
}
