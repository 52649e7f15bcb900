#include "doctest.h"

#include <thread>

#include "qeuler/classical.hpp"

using namespace qeuler;
using namespace qeuler::classical;

TEST_CASE("euler numbers")
{
    CHECK(euler_number(0) == Rational(1));
    CHECK(euler_number(1) == Rational(-1, 2));
    CHECK(euler_number(3) == Rational(1, 4));
    CHECK(euler_number(5) == Rational(-1, 2));
    CHECK(euler_number(7) == Rational(17, 8));
    for (unsigned n = 2; n <= 12; n += 2)
        CHECK(euler_number(n).is_zero());

    // Generating relation: sum_k C(n,k) E_k + E_n = 0 for n >= 1.
    const auto e = euler_numbers(20);
    REQUIRE(e.size() == 21);
    for (unsigned n = 1; n <= 20; ++n) {
        Rational acc = e[n];
        for (unsigned k = 0; k <= n; ++k)
            acc += Rational(binom(n, k)) * e[k];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (unsigned n = 3; n <= 13; n += 2)
        CHECK(bernoulli_number(n).is_zero());
}

TEST_CASE("euler polynomials")
{
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(euler_poly(n, Rational()) == euler_number(n));
    CHECK(euler_poly(2, Rational(3)) == Rational(6));
    CHECK(euler_poly(1, Rational(1, 2)).is_zero());

    // E_n(x) + E_n(x+1) = 2 x^n
    for (unsigned n = 0; n <= 10; ++n) {
        for (const Rational& x : {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2)})
            CHECK(euler_poly(n, x) + euler_poly(n, x + Rational(1)) == Rational(2) * pow(x, n));
    }
}

TEST_CASE("power sums")
{
    CHECK(power_sum(3, 4) == Rational(36));
    CHECK(power_sum(1, 5) == Rational(10));
    CHECK(power_sum(4, 1).is_zero());
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned long k = 1; k <= 50; ++k)
            CHECK(power_sum(n, k) == power_sum_closed(n, k));
    }
}

TEST_CASE("alternating power sums")
{
    CHECK(alt_power_sum(2, 4) == Rational(-6));
    CHECK(alt_power_sum(2, 3) == Rational(3));
    CHECK(alt_power_sum(5, 1).is_zero());
    CHECK(alt_power_sum_closed(2, 4) == Rational(-6));
    CHECK(alt_power_sum_closed(2, 3) == Rational(3));
    for (unsigned m = 1; m <= 12; ++m) {
        for (unsigned long k = 1; k <= 50; ++k)
            CHECK(alt_power_sum(m, k) == alt_power_sum_closed(m, k));
    }
}

TEST_CASE("sign exponent m+1 disagrees with brute force")
{
    // m = 2, k = 3: the sum is 3, but (E_2 + (-1)^(m+1) E_2(3))/2 = -3.
    const Rational wrong_sign = (euler_number(2) - euler_poly(2, Rational(3))) / Rational(2);
    CHECK(wrong_sign == Rational(-3));
    CHECK(alt_power_sum(2, 3) == Rational(3));
}

TEST_CASE("memo tables are safe under concurrent extension")
{
    std::vector<Rational> seen(8);
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < 8; ++i)
        threads.emplace_back([i, &seen] { seen[i] = euler_number(40 + i) + bernoulli_number(40 + i); });
    for (auto& t : threads)
        t.join();
    for (unsigned i = 0; i < 8; ++i)
        CHECK(seen[i] == euler_number(40 + i) + bernoulli_number(40 + i));
}
