#include "qeuler/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>

namespace qeuler {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

BigInt parse_signed_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw DomainError("not a rational number: '" + std::string(whole) + "'");
    BigInt v(std::string(s), 10);
    return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty())
        throw DomainError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_signed_integer(trim(s.substr(0, slash)), s);
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!all_digits(den_text))
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        return Rational(num, BigInt(std::string(den_text), 10));
    }

    // Decimal: [sign] digits [. digits] [e [sign] digits]
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        const BigInt ev = parse_signed_integer(s.substr(e + 1), s);
        if (mpz_cmpabs_ui(ev.get_mpz_t(), 100000) > 0)
            throw DomainError("exponent out of range: '" + std::string(s) + "'");
        exponent = ev.get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        const std::string_view ip = mantissa.substr(0, dot);
        const std::string_view fp = mantissa.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa))
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        digits = std::string(mantissa);
    }
    BigInt num(digits, 10);
    if (negative)
        num = -num;
    const long scale = exponent - frac_len;
    if (scale >= 0)
        return Rational(BigInt(num * pow10(static_cast<unsigned long>(scale))));
    return Rational(num, pow10(static_cast<unsigned long>(-scale)));
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational abs(const Rational& x)
{
    return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x.is_zero())
            throw DomainError("zero raised to a negative power");
        return pow(Rational(1) / x, -e);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

BigInt binom(unsigned long n, unsigned long k)
{
    BigInt r;
    if (k > n)
        return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rat_pow(const Rational& q, const Rational& r)
{
    if (q.sign() <= 0)
        throw DomainError("rat_pow requires a positive base, got " + q.to_string());
    const BigInt a = r.num();
    const BigInt f = r.den();
    if (!a.fits_slong_p() || !f.fits_ulong_p())
        throw DomainError("rat_pow exponent too large: " + r.to_string());

    const Rational base = pow(q, a.get_si());
    const unsigned long root = f.get_ui();
    if (root == 1)
        return base;

    BigInt num;
    BigInt den;
    const bool num_exact = mpz_root(num.get_mpz_t(), base.raw().get_num_mpz_t(), root) != 0;
    const bool den_exact = mpz_root(den.get_mpz_t(), base.raw().get_den_mpz_t(), root) != 0;
    if (!num_exact || !den_exact)
        throw NotExactPower(q.to_string() + "^(" + r.to_string() + ") is not rational");
    return Rational(num, den);
}

// ---------------------------------------------------------------------------

mpfr_prec_t digits_to_bits(int digits)
{
    // log2(10) = 3.3219...; a few spare bits absorb rounding in the conversion.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real(Uninit, int digits, int guard) : digits_(digits)
{
    if (digits < 1)
        throw DomainError("precision must be positive");
    mpfr_init2(value_, digits_to_bits(digits + guard));
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, int digits, int guard) : Real(Uninit{}, digits, guard)
{
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, int digits, int guard) : Real(Uninit{}, digits, guard)
{
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) : digits_(other.digits_)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    if (this != &other) {
        mpfr_swap(value_, other.value_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

Real::~Real()
{
    mpfr_clear(value_);
}

Real Real::sized_like(const Real& a, const Real& b)
{
    Real r = zero(std::max(a.digits_, b.digits_));
    mpfr_set_prec(r.value_, std::max(a.bits(), b.bits()));
    return r;
}

std::string Real::to_string() const
{
    return to_string(digits_);
}

std::string Real::to_string(int significant) const
{
    if (mpfr_nan_p(value_))
        return "nan";
    if (mpfr_inf_p(value_))
        return sign() < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(value_))
        return "0";

    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), value_, MPFR_RNDN), mpfr_free_str);
    std::string digits(raw.get());
    std::string sign;
    if (digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // value = 0.d1d2d3... * 10^exp10
    const long n = static_cast<long>(digits.size());
    if (exp10 > n + 20 || exp10 < -20) {
        std::string out = sign + digits.substr(0, 1);
        if (n > 1)
            out += "." + digits.substr(1);
        return out + "e" + std::to_string(exp10 - 1);
    }
    if (exp10 <= 0)
        return sign + "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    if (exp10 >= n)
        return sign + digits + std::string(static_cast<size_t>(exp10 - n), '0');
    return sign + digits.substr(0, static_cast<size_t>(exp10)) + "." + digits.substr(static_cast<size_t>(exp10));
}

Real Real::rounded(int digits, int guard) const
{
    Real r = zero(digits, guard);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

Real Real::tolerance(int digits)
{
    Real r = zero(digits);
    mpfr_set_ui(r.value_, 10, MPFR_RNDN);
    mpfr_pow_si(r.value_, r.value_, -(digits - 10), MPFR_RNDN);
    return r;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& rhs)
{
    return *this = *this + rhs;
}

Real& Real::operator-=(const Real& rhs)
{
    return *this = *this - rhs;
}

Real& Real::operator*=(const Real& rhs)
{
    return *this = *this * rhs;
}

Real& Real::operator/=(const Real& rhs)
{
    return *this = *this / rhs;
}

Real operator+(const Real& a, const Real& b)
{
    Real r = Real::sized_like(a, b);
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r = Real::sized_like(a, b);
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r = Real::sized_like(a, b);
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    if (b.is_zero())
        throw DomainError("division by zero");
    Real r = Real::sized_like(a, b);
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x)
{
    Real r(x);
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x)
{
    Real r(x);
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x)
{
    if (x.sign() <= 0)
        throw DomainError("log of a non-positive number");
    Real r(x);
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real distance(const Real& a, const Real& b)
{
    return abs(a - b);
}

Real distance(const Real& a, const Rational& b)
{
    Real exact(b, a.digits());
    mpfr_set_prec(exact.raw(), a.bits());
    mpfr_set_q(exact.raw(), b.raw().get_mpq_t(), MPFR_RNDN);
    return abs(a - exact);
}

Real gen_binom(const Real& s, unsigned long k)
{
    Real c(1L, s.digits());
    mpfr_set_prec(c.raw(), s.bits());
    mpfr_set_ui(c.raw(), 1, MPFR_RNDN);
    Real factor(s);
    for (unsigned long i = 0; i < k; ++i) {
        // factor = s + i; c *= factor / (i + 1)
        mpfr_add_ui(factor.raw(), s.raw(), i, MPFR_RNDN);
        mpfr_mul(c.raw(), c.raw(), factor.raw(), MPFR_RNDN);
        mpfr_div_ui(c.raw(), c.raw(), i + 1, MPFR_RNDN);
        if (c.is_zero())
            break;
    }
    return c;
}

Real real_pow(const Real& q, const Real& r)
{
    if (q.sign() <= 0)
        throw DomainError("real_pow requires a positive base");
    Real out = q * r; // sized to the wider operand
    mpfr_pow(out.raw(), q.raw(), r.raw(), MPFR_RNDN);
    return out;
}

} // namespace qeuler
