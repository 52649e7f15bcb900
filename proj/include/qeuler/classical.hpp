#pragma once

// Classical (q -> 1) Euler and Bernoulli baselines.

#include <vector>

#include "qeuler/exactnum.hpp"

namespace qeuler::classical {

/// E_n, the coefficient of t^n/n! in 2/(e^t + 1). Memoized.
Rational euler_number(unsigned n);

/// E_0..E_n in one call.
std::vector<Rational> euler_numbers(unsigned n);

/// B_n with B_1 = -1/2. Memoized.
Rational bernoulli_number(unsigned n);

/// E_n(x) = sum_k C(n,k) E_k x^(n-k).
Rational euler_poly(unsigned n, const Rational& x);

/// sum_{l=0}^{k-1} l^n by direct summation.
Rational power_sum(unsigned n, unsigned long k);

/// (1/(n+1)) sum_{i=0}^{n} C(n+1,i) B_i k^(n+1-i).
Rational power_sum_closed(unsigned n, unsigned long k);

/// sum_{l=0}^{k-1} (-1)^l l^m by direct summation.
Rational alt_power_sum(unsigned m, unsigned long k);

/// (E_m + (-1)^(k+1) E_m(k)) / 2. The sign depends on the number of terms k.
Rational alt_power_sum_closed(unsigned m, unsigned long k);

} // namespace qeuler::classical
