#pragma once

// Exact rational arithmetic (GMP) and fixed-precision reals (MPFR).
//
// Rational is the value type of every identity-level computation. Real
// carries a declared output precision P in decimal digits and always works
// with P + guard digits internally; a value produced "at precision P" is
// certified to absolute error 10^-(P-10).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "qeuler/errors.hpp"

namespace qeuler {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                 // NOLINT(implicit)
    Rational(int value) : value_(static_cast<long>(value)) {} // NOLINT(implicit)
    Rational(const BigInt& value) : value_(value) {}       // NOLINT(implicit)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "a", "a/b", and finite decimals such as "-0.125" or "2.5e-3".
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }

    /// Canonical form "num/den"; the denominator is printed even when it is 1.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

Rational abs(const Rational& x);

/// x^e for any integer e; 0^e with e < 0 is a DomainError.
Rational pow(const Rational& x, long e);

/// (-1)^e as an int.
constexpr int alt_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binom(unsigned long n, unsigned long k);

/// Exact q^r for r = a/f in lowest terms. Throws NotExactPower when q^a has
/// no rational f-th root, DomainError when q <= 0.
Rational rat_pow(const Rational& q, const Rational& r);

// ---------------------------------------------------------------------------

inline constexpr int kDefaultDigits = 50;
inline constexpr int kGuardDigits = 20;

/// Binary precision needed to carry `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Arbitrary-precision real with a declared output precision in decimal
/// digits. Storage precision is digits + guard digits.
class Real {
public:
    Real() : Real(Uninit{}, kDefaultDigits, kGuardDigits) {}
    static Real zero(int digits, int guard = kGuardDigits) { return Real(Uninit{}, digits, guard); }
    Real(long value, int digits, int guard = kGuardDigits);
    Real(const Rational& value, int digits, int guard = kGuardDigits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    int digits() const { return digits_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Decimal rendering with exactly digits() significant digits.
    std::string to_string() const;
    std::string to_string(int significant) const;

    /// Copy rounded to a new declared precision.
    Real rounded(int digits, int guard = kGuardDigits) const;

    /// Certified absolute error bound 10^-(P-10) for this value's precision.
    static Real tolerance(int digits);

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

private:
    struct Uninit {};
    Real(Uninit, int digits, int guard);

    // Fresh value whose precision is the larger of the two operands'.
    static Real sized_like(const Real& a, const Real& b);

    mpfr_t value_;
    int digits_;
};

Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);

/// |a - b| as a Real.
Real distance(const Real& a, const Real& b);
Real distance(const Real& a, const Rational& b);

/// Rising-factorial coefficient prod_{i<k}(s+i)/k! = C(s+k-1, k).
Real gen_binom(const Real& s, unsigned long k);

/// q^r = exp(r ln q) for q > 0. r = 0 gives exactly 1.
Real real_pow(const Real& q, const Real& r);

} // namespace qeuler
