#include "qeuler/qzeta.hpp"

#include <functional>

namespace qeuler {

namespace {

// Series stop: at least this many terms, then three consecutive terms below
// 10^-(P+15) * (1 + |partial sum|).
constexpr unsigned long kMinTerms = 8;
constexpr int kSmallRun = 3;
constexpr unsigned long kContinuationCap = 2'000'000;
// Working digits beyond P for the Euler transform; rounding in level k is
// amplified by at most 2^k and damped by the 2^-(k+1) weight.
constexpr int kTransformGuard = kGuardDigits + 10;

class TailMonitor {
public:
    explicit TailMonitor(int digits) : threshold_(Real::zero(digits))
    {
        mpfr_set_ui(threshold_.raw(), 10, MPFR_RNDN);
        mpfr_pow_si(threshold_.raw(), threshold_.raw(), -(digits + 15), MPFR_RNDN);
    }

    // Returns true once the tail is certified small.
    bool observe(unsigned long k, const Real& term, const Real& sum)
    {
        Real bound = threshold_ * (Real(1L, sum.digits()) + abs(sum));
        if (k >= kMinTerms && abs(term) < bound)
            ++run_;
        else
            run_ = 0;
        return run_ >= kSmallRun;
    }

private:
    Real threshold_;
    int run_ = 0;
};

unsigned long transform_cap(int digits)
{
    return 4UL * static_cast<unsigned long>(digits) + 200UL;
}

// sum_{n>=0} (-1)^n a_n = sum_k (-1)^k (Delta^k a)_0 / 2^(k+1).
// `next` yields a_0, a_1, ... in order. The anti-diagonal diag[j] holds
// Delta^j a_{n-j} after a_n has been absorbed.
Real euler_transform(const std::function<Real()>& next, int digits)
{
    const unsigned long cap = transform_cap(digits);
    std::vector<Real> diag;
    diag.reserve(256);
    Real sum = Real::zero(digits, kTransformGuard);
    TailMonitor monitor(digits);
    for (unsigned long k = 0; k <= cap; ++k) {
        Real carry = next();
        for (auto& cell : diag) {
            Real lower = carry - cell;
            cell = std::move(carry);
            carry = std::move(lower);
        }
        diag.push_back(carry);

        Real term = carry;
        mpfr_div_2ui(term.raw(), term.raw(), k + 1, MPFR_RNDN);
        if (k % 2 == 1)
            term = -term;
        sum += term;
        if (monitor.observe(k, term, sum))
            return sum.rounded(digits);
    }
    throw NonConvergence("Euler transform did not converge within " + std::to_string(cap) + " levels");
}

void check_digits(int digits)
{
    if (digits < kMinZetaDigits)
        throw DomainError("zeta evaluation needs at least " + std::to_string(kMinZetaDigits) + " digits");
}

void check_partial(unsigned long a, unsigned long f)
{
    if (f < 3 || f % 2 == 0)
        throw DomainError("partial zeta needs an odd modulus F >= 3, got " + std::to_string(f));
    if (a == 0 || a >= f)
        throw DomainError("partial zeta needs 0 < a < F, got a = " + std::to_string(a));
}

Real q_int_real(unsigned long k, const QBase& q, int digits)
{
    return Real(q_int(k, q), digits);
}

} // namespace

ZetaQuery ZetaQuery::make(const Real& s, const Real& x, const Rational& q, int digits)
{
    check_digits(digits);
    if (x.sign() <= 0)
        throw DomainError("zeta evaluation requires x > 0");
    return ZetaQuery(s.rounded(digits), x.rounded(digits), QBase::zeta(q), digits);
}

ZetaQuery ZetaQuery::make(const Rational& s, const Rational& x, const Rational& q, int digits)
{
    check_digits(digits);
    return make(Real(s, digits), Real(x, digits), q, digits);
}

Real zeta(const ZetaQuery& zq)
{
    const int digits = zq.digits();
    const Real one(1L, digits);
    const Real q(zq.q().q(), digits);
    const Real& s = zq.s();
    const Real qx = real_pow(q, zq.x());

    Real sum = Real::zero(digits);
    Real coeff = one;     // C(s+k-1, k)
    Real qx_pow = one;    // q^(xk)
    Real q_pow = one;     // q^k
    TailMonitor monitor(digits);
    for (unsigned long k = 0;; ++k) {
        const Real term = coeff * qx_pow / (one + q_pow);
        sum += term;
        if (monitor.observe(k, term, sum))
            break;
        if (k >= kContinuationCap)
            throw NonConvergence("continuation series did not converge");
        // coeff *= (s + k) / (k + 1)
        Real factor = s;
        mpfr_add_ui(factor.raw(), s.raw(), k, MPFR_RNDN);
        coeff *= factor;
        mpfr_div_ui(coeff.raw(), coeff.raw(), k + 1, MPFR_RNDN);
        qx_pow *= qx;
        q_pow *= q;
    }
    return (real_pow(one - q, s) * sum).rounded(digits);
}

Real zeta_euler_transform(const ZetaQuery& zq)
{
    const int digits = zq.digits();
    const Real one(1L, digits, kTransformGuard);
    const Real q(zq.q().q(), digits, kTransformGuard);
    const Real neg_s = -zq.s().rounded(digits, kTransformGuard);
    const Real one_minus_q = one - q;

    Real q_pow = real_pow(q, zq.x().rounded(digits, kTransformGuard)); // q^(n+x)
    auto next = [&]() {
        Real a = real_pow((one - q_pow) / one_minus_q, neg_s);
        q_pow *= q;
        return a;
    };
    return euler_transform(next, digits);
}

InterpolationCheck interpolate_check(unsigned n, unsigned long x, const Rational& q, int digits)
{
    if (x == 0)
        throw DomainError("interpolation check needs a positive integer x");
    const QBase base = QBase::zeta(q);
    const auto at_x = QPower::with_value(base, pow(q, static_cast<long>(x)), Rational(BigInt(x)));
    InterpolationCheck check{q_euler_poly(n, at_x) / Rational(2), Real(), Real()};
    check.approx = zeta(ZetaQuery::make(Rational(-static_cast<long>(n)), Rational(BigInt(x)), q, digits));
    check.deviation = distance(check.approx, check.exact);
    check.agrees = check.deviation <= Real::tolerance(digits);
    return check;
}

Real detail::residue_class_zeta(const Real& s, unsigned long a, unsigned long f, const QBase& q, int digits)
{
    const QBase qf = q.power(f);
    const Real x = Real(Rational(BigInt(a), BigInt(f)), digits);
    const Real value = zeta(ZetaQuery::make(s, x, qf.q(), digits));
    const Real scale = real_pow(q_int_real(f, q, digits), -s.rounded(digits));
    const Real h = scale * value;
    return (a % 2 == 0 ? h : -h).rounded(digits);
}

Rational detail::residue_class_special_value(unsigned n, unsigned long a, unsigned long f, const QBase& q)
{
    const QBase qf = q.power(f);
    const auto at = QPower::with_value(qf, pow(q.q(), static_cast<long>(a)), Rational(BigInt(a), BigInt(f)));
    const Rational value = pow(q_int(f, q), n) * q_euler_poly(n, at) / Rational(2);
    return a % 2 == 0 ? value : -value;
}

Real partial_zeta(const Real& s, unsigned long a, unsigned long f, const Rational& q, int digits)
{
    check_digits(digits);
    check_partial(a, f);
    return detail::residue_class_zeta(s, a, f, QBase::zeta(q), digits);
}

Real partial_zeta_direct(const Real& s, unsigned long a, unsigned long f, const Rational& q, int digits)
{
    check_digits(digits);
    check_partial(a, f);
    const QBase base = QBase::zeta(q);
    const Real one(1L, digits, kTransformGuard);
    const Real qr(base.q(), digits, kTransformGuard);
    const Real qf(pow(base.q(), static_cast<long>(f)), digits, kTransformGuard);
    const Real neg_s = -s.rounded(digits, kTransformGuard);
    const Real one_minus_q = one - qr;

    // (-1)^(a+nF) = (-1)^a (-1)^n for odd F.
    Real q_pow(pow(base.q(), static_cast<long>(a)), digits, kTransformGuard); // q^(a+nF)
    auto next = [&]() {
        Real term = real_pow((one - q_pow) / one_minus_q, neg_s);
        q_pow *= qf;
        return term;
    };
    const Real value = euler_transform(next, digits);
    return a % 2 == 0 ? value : -value;
}

Rational partial_zeta_special_value(unsigned n, unsigned long a, unsigned long f, const Rational& q)
{
    check_partial(a, f);
    return detail::residue_class_special_value(n, a, f, QBase::zeta(q));
}

} // namespace qeuler
