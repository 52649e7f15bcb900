#pragma once

// Modified q-Euler numbers and polynomials, the star variant, the
// alternating q-power-sum identities and the distribution relation.
//
// All operations here are exact. Every identity is a rational-function
// identity in q, so any rational q > 0 with q != 1 is accepted; the
// convergence regime 0 < q < 1 is only enforced where a series is summed
// (see QBase::zeta).

#include <optional>
#include <vector>

#include "qeuler/exactnum.hpp"

namespace qeuler {

/// Validated q parameter.
class QBase {
public:
    /// q > 0 and q != 1; suitable for every exact identity.
    static QBase exact(const Rational& q);
    /// 0 < q < 1; suitable for zeta and L-function evaluation.
    static QBase zeta(const Rational& q);

    const Rational& q() const { return q_; }
    bool zeta_domain() const { return zeta_domain_; }

    /// The base q^f, keeping the domain flag.
    QBase power(unsigned long f) const;

    friend bool operator==(const QBase&, const QBase&) = default;

private:
    QBase(Rational q, bool zeta_domain) : q_(std::move(q)), zeta_domain_(zeta_domain) {}

    Rational q_;
    bool zeta_domain_ = false;
};

/// The pair (q, t) with t = q^y held exactly, so that polynomials in q^x
/// can be evaluated exactly at fractional x.
class QPower {
public:
    /// t = q^y; throws NotExactPower when q^y is irrational.
    static QPower at(const QBase& base, const Rational& y);
    /// Caller asserts t = q^y; the optional hint y is checked by consistent().
    static QPower with_value(const QBase& base, const Rational& t, std::optional<Rational> y = std::nullopt);

    const QBase& base() const { return base_; }
    const Rational& q() const { return base_.q(); }
    const Rational& t() const { return t_; }
    const std::optional<Rational>& exponent_hint() const { return hint_; }

    /// With hint y = a/f, verifies t^f == q^a exactly. True without a hint.
    bool consistent() const;

private:
    QPower(QBase base, Rational t, std::optional<Rational> hint)
        : base_(std::move(base)), t_(std::move(t)), hint_(std::move(hint))
    {
    }

    QBase base_;
    Rational t_;
    std::optional<Rational> hint_;
};

/// [k]_q = (1 - q^k)/(1 - q).
Rational q_int(unsigned long k, const QBase& q);

/// [x]_q = (1 - q^x)/(1 - q) from t = q^x.
Rational q_int(const QPower& qp);

/// E_{n,q} = 2 (1/(1-q))^n sum_j C(n,j) (-1)^j / (1 + q^j).
Rational q_euler_number(unsigned n, const QBase& q);

/// E_{0,q} .. E_{n,q}.
std::vector<Rational> q_euler_numbers(unsigned n, const QBase& q);

/// E_{n,q}(x) = 2 (1/(1-q))^n sum_j C(n,j) (-1)^j q^(xj) / (1 + q^j).
Rational q_euler_poly(unsigned n, const QPower& qp);

/// E_{n,q}(x) = sum_{k=0}^{n} C(n,k) q^(kx) E_{k,q} [x]_q^(n-k).
Rational q_euler_poly_via_numbers(unsigned n, const QPower& qp);

/// E*_{n,q} = [2]_q (1/(1-q))^n sum_l C(n,l) (-1)^l / (1 + q^(l+1)).
Rational q_euler_star_number(unsigned n, const QBase& q);

/// E*_{n,q}(x) = [2]_q (1/(1-q))^n sum_j C(n,j) (-1)^j q^(xj) / (1 + q^(j+1)).
Rational q_euler_star_poly(unsigned n, const QPower& qp);

/// sum_{l=0}^{n-1} (-1)^l [l]_q^m, by direct summation.
Rational alt_q_power_sum(unsigned m, unsigned long n, const QBase& q);

/// (E_{m,q} + (-1)^(n+1) E_{m,q}(n)) / 2.
Rational alt_q_power_sum_closed(unsigned m, unsigned long n, const QBase& q);

/// sum_{l=0}^{n-1} (-1)^l q^l [l]_q^m, by direct summation.
Rational weighted_alt_q_power_sum(unsigned m, unsigned long n, const QBase& q);

/// (E*_{m,q} + (-1)^(n+1) q^n E*_{m,q}(n)) / [2]_q.
Rational weighted_alt_q_power_sum_closed(unsigned m, unsigned long n, const QBase& q);

/// [f]_q^m sum_{a=0}^{f-1} (-1)^a E_{m,q^f}((x+a)/f), for odd f and integer x.
/// Equals E_{m,q}(x). Even or zero f is a DomainError.
Rational distribution_lhs(unsigned m, unsigned long f, long x, const QBase& q);

} // namespace qeuler
