#include "qeuler/qeuler.hpp"

namespace qeuler {

namespace {

// (1/(1-q))^n * sum_{j=0}^{n} C(n,j) (-1)^j t^j / (1 + q^(j+shift))
Rational alternating_kernel(unsigned n, const Rational& q, const Rational& t, unsigned shift)
{
    Rational acc;
    Rational t_pow(1);
    Rational q_pow = pow(q, shift);
    for (unsigned j = 0; j <= n; ++j) {
        Rational term = Rational(binom(n, j)) * t_pow / (Rational(1) + q_pow);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
        t_pow *= t;
        q_pow *= q;
    }
    return acc / pow(Rational(1) - q, n);
}

} // namespace

QBase QBase::exact(const Rational& q)
{
    if (q.sign() <= 0)
        throw DomainError("q must be positive, got " + q.to_string());
    if (q == Rational(1))
        throw DomainError("q must differ from 1");
    return QBase(q, false);
}

QBase QBase::zeta(const Rational& q)
{
    if (q.sign() <= 0 || q >= Rational(1))
        throw DomainError("zeta evaluation requires 0 < q < 1, got " + q.to_string());
    return QBase(q, true);
}

QBase QBase::power(unsigned long f) const
{
    if (f == 0)
        throw DomainError("q^0 = 1 is not a valid base");
    return QBase(qeuler::pow(q_, static_cast<long>(f)), zeta_domain_);
}

QPower QPower::at(const QBase& base, const Rational& y)
{
    return QPower(base, rat_pow(base.q(), y), y);
}

QPower QPower::with_value(const QBase& base, const Rational& t, std::optional<Rational> y)
{
    if (t.sign() <= 0)
        throw DomainError("q^x must be positive, got " + t.to_string());
    return QPower(base, t, std::move(y));
}

bool QPower::consistent() const
{
    if (!hint_)
        return true;
    const BigInt a = hint_->num();
    const BigInt f = hint_->den();
    return pow(t_, static_cast<long>(f.get_ui())) == pow(q(), a.get_si());
}

Rational q_int(unsigned long k, const QBase& q)
{
    return (Rational(1) - pow(q.q(), static_cast<long>(k))) / (Rational(1) - q.q());
}

Rational q_int(const QPower& qp)
{
    return (Rational(1) - qp.t()) / (Rational(1) - qp.q());
}

Rational q_euler_number(unsigned n, const QBase& q)
{
    return Rational(2) * alternating_kernel(n, q.q(), Rational(1), 0);
}

std::vector<Rational> q_euler_numbers(unsigned n, const QBase& q)
{
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        out.push_back(q_euler_number(k, q));
    return out;
}

Rational q_euler_poly(unsigned n, const QPower& qp)
{
    return Rational(2) * alternating_kernel(n, qp.q(), qp.t(), 0);
}

Rational q_euler_poly_via_numbers(unsigned n, const QPower& qp)
{
    const auto numbers = q_euler_numbers(n, qp.base());
    const Rational x_int = q_int(qp);
    Rational acc;
    Rational t_pow(1);
    for (unsigned k = 0; k <= n; ++k) {
        acc += Rational(binom(n, k)) * t_pow * numbers[k] * pow(x_int, static_cast<long>(n - k));
        t_pow *= qp.t();
    }
    return acc;
}

Rational q_euler_star_number(unsigned n, const QBase& q)
{
    return q_int(2, q) * alternating_kernel(n, q.q(), Rational(1), 1);
}

Rational q_euler_star_poly(unsigned n, const QPower& qp)
{
    return q_int(2, qp.base()) * alternating_kernel(n, qp.q(), qp.t(), 1);
}

Rational alt_q_power_sum(unsigned m, unsigned long n, const QBase& q)
{
    Rational acc;
    for (unsigned long l = 0; l < n; ++l) {
        const Rational term = pow(q_int(l, q), m);
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Rational alt_q_power_sum_closed(unsigned m, unsigned long n, const QBase& q)
{
    const auto shifted = QPower::with_value(q, pow(q.q(), static_cast<long>(n)), Rational(BigInt(n)));
    const Rational tail = q_euler_poly(m, shifted);
    const Rational signed_tail = (n % 2 == 1) ? tail : -tail; // (-1)^(n+1)
    return (q_euler_number(m, q) + signed_tail) / Rational(2);
}

Rational weighted_alt_q_power_sum(unsigned m, unsigned long n, const QBase& q)
{
    Rational acc;
    Rational q_pow(1);
    for (unsigned long l = 0; l < n; ++l) {
        const Rational term = q_pow * pow(q_int(l, q), m);
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
        q_pow *= q.q();
    }
    return acc;
}

Rational weighted_alt_q_power_sum_closed(unsigned m, unsigned long n, const QBase& q)
{
    const Rational q_n = pow(q.q(), static_cast<long>(n));
    const auto shifted = QPower::with_value(q, q_n, Rational(BigInt(n)));
    const Rational tail = q_n * q_euler_star_poly(m, shifted);
    const Rational signed_tail = (n % 2 == 1) ? tail : -tail;
    return (q_euler_star_number(m, q) + signed_tail) / q_int(2, q);
}

Rational distribution_lhs(unsigned m, unsigned long f, long x, const QBase& q)
{
    if (f == 0 || f % 2 == 0)
        throw DomainError("distribution relation needs an odd positive f, got " + std::to_string(f));
    const QBase qf = q.power(f);
    const auto f_signed = static_cast<long>(f);
    Rational acc;
    for (long a = 0; a < f_signed; ++a) {
        // (q^f)^((x+a)/f) = q^(x+a)
        const auto inner = QPower::with_value(qf, pow(q.q(), x + a), Rational(x + a, f_signed));
        const Rational value = q_euler_poly(m, inner);
        if (a % 2 == 0)
            acc += value;
        else
            acc -= value;
    }
    return pow(q_int(f, q), m) * acc;
}

} // namespace qeuler
