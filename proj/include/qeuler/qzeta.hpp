#pragma once

// Euler q-zeta function zeta_{E,q}(s, x) = sum_{n>=0} (-1)^n / [n+x]_q^s and
// the partial Euler q-zeta function H_q(s, a; F).
//
// The defining series does not converge in the ordinary sense (its terms
// tend to (1-q)^s), so it is evaluated in the Abel/Euler sense. Two
// independent routes are provided:
//
//   zeta()                  binomial continuation series
//                           (1-q)^s sum_k C(s+k-1,k) q^(xk) / (1+q^k)
//   zeta_euler_transform()  Euler transform of the raw alternating series
//
// Both certify absolute error 10^-(P-10) at precision P.

#include "qeuler/exactnum.hpp"
#include "qeuler/qeuler.hpp"

namespace qeuler {

/// Validated zeta evaluation point.
class ZetaQuery {
public:
    /// Requires 0 < q < 1, x > 0 and digits >= 15.
    static ZetaQuery make(const Real& s, const Real& x, const Rational& q, int digits = kDefaultDigits);
    static ZetaQuery make(const Rational& s, const Rational& x, const Rational& q, int digits = kDefaultDigits);

    const Real& s() const { return s_; }
    const Real& x() const { return x_; }
    const QBase& q() const { return q_; }
    int digits() const { return digits_; }

private:
    ZetaQuery(Real s, Real x, QBase q, int digits)
        : s_(std::move(s)), x_(std::move(x)), q_(std::move(q)), digits_(digits)
    {
    }

    Real s_;
    Real x_;
    QBase q_;
    int digits_;
};

inline constexpr int kMinZetaDigits = 15;

/// Continuation-series value of zeta_{E,q}(s, x).
Real zeta(const ZetaQuery& zq);

/// Euler-transform value of the defining series. Throws NonConvergence when
/// the difference tail does not shrink within 4P + 200 levels.
Real zeta_euler_transform(const ZetaQuery& zq);

struct InterpolationCheck {
    Rational exact;   // E_{n,q}(x) / 2
    Real approx;      // zeta(-n, x)
    Real deviation;
    bool agrees = false;
};

/// Compares zeta(-n, x) with E_{n,q}(x)/2 for integer x >= 1.
InterpolationCheck interpolate_check(unsigned n, unsigned long x, const Rational& q, int digits = kDefaultDigits);

/// H_q(s, a; F) = [F]_q^(-s) (-1)^a zeta_{E,q^F}(s, a/F) for odd F >= 3 and 0 < a < F.
Real partial_zeta(const Real& s, unsigned long a, unsigned long f, const Rational& q, int digits = kDefaultDigits);

/// H_q(s, a; F) summed directly, (-1)^a sum_n (-1)^n / [a+nF]_q^s, by the Euler transform.
Real partial_zeta_direct(const Real& s, unsigned long a, unsigned long f, const Rational& q,
                         int digits = kDefaultDigits);

/// H_q(-n, a; F) = (-1)^a [F]_q^n E_{n,q^F}(a/F) / 2, exactly.
Rational partial_zeta_special_value(unsigned n, unsigned long a, unsigned long f, const Rational& q);

namespace detail {

// Residue-class sum over m = a + nF with 0 < a <= F; a = F is the class of
// multiples of F. Used by the L-function decomposition.
Real residue_class_zeta(const Real& s, unsigned long a, unsigned long f, const QBase& q, int digits);
Rational residue_class_special_value(unsigned n, unsigned long a, unsigned long f, const QBase& q);

} // namespace detail

} // namespace qeuler
