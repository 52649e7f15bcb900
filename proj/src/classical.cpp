#include "qeuler/classical.hpp"

#include <mutex>
#include <shared_mutex>

namespace qeuler::classical {

namespace {

// Grow-only table of exact values. Readers share the lock; extension is
// serialized and each entry is computed once.
class MemoTable {
public:
    using Extend = Rational (*)(const std::vector<Rational>& prefix);

    MemoTable(std::vector<Rational> seed, Extend extend) : values_(std::move(seed)), extend_(extend) {}

    Rational at(unsigned n)
    {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size())
                return values_[n];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= n)
            values_.push_back(extend_(values_));
        return values_[n];
    }

    std::vector<Rational> prefix(unsigned n)
    {
        at(n);
        std::shared_lock lock(mutex_);
        return {values_.begin(), values_.begin() + n + 1};
    }

private:
    std::shared_mutex mutex_;
    std::vector<Rational> values_;
    Extend extend_;
};

// 2 E_n = -sum_{k<n} C(n,k) E_k, from (e^t + 1) * sum E_n t^n/n! = 2.
Rational next_euler(const std::vector<Rational>& e)
{
    const auto n = static_cast<unsigned long>(e.size());
    Rational acc;
    for (unsigned long k = 0; k < n; ++k)
        acc += Rational(binom(n, k)) * e[k];
    return -acc / Rational(2);
}

// B_n = -(1/(n+1)) sum_{k<n} C(n+1,k) B_k.
Rational next_bernoulli(const std::vector<Rational>& b)
{
    const auto n = static_cast<unsigned long>(b.size());
    Rational acc;
    for (unsigned long k = 0; k < n; ++k)
        acc += Rational(binom(n + 1, k)) * b[k];
    return -acc / Rational(static_cast<long>(n + 1));
}

MemoTable& euler_table()
{
    static MemoTable table({Rational(1)}, &next_euler);
    return table;
}

MemoTable& bernoulli_table()
{
    static MemoTable table({Rational(1)}, &next_bernoulli);
    return table;
}

Rational int_pow(unsigned long base, unsigned e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return Rational(r);
}

} // namespace

Rational euler_number(unsigned n)
{
    return euler_table().at(n);
}

std::vector<Rational> euler_numbers(unsigned n)
{
    return euler_table().prefix(n);
}

Rational bernoulli_number(unsigned n)
{
    return bernoulli_table().at(n);
}

Rational euler_poly(unsigned n, const Rational& x)
{
    const auto e = euler_numbers(n);
    // Horner in x over the coefficients C(n,k) E_k of x^(n-k).
    Rational acc;
    for (unsigned k = 0; k <= n; ++k)
        acc = acc * x + Rational(binom(n, k)) * e[k];
    return acc;
}

Rational power_sum(unsigned n, unsigned long k)
{
    Rational acc;
    for (unsigned long l = 0; l < k; ++l)
        acc += int_pow(l, n);
    return acc;
}

Rational power_sum_closed(unsigned n, unsigned long k)
{
    Rational acc;
    for (unsigned i = 0; i <= n; ++i)
        acc += Rational(binom(n + 1, i)) * bernoulli_number(i) * int_pow(k, n + 1 - i);
    return acc / Rational(static_cast<long>(n) + 1);
}

Rational alt_power_sum(unsigned m, unsigned long k)
{
    Rational acc;
    for (unsigned long l = 0; l < k; ++l) {
        if (l % 2 == 0)
            acc += int_pow(l, m);
        else
            acc -= int_pow(l, m);
    }
    return acc;
}

Rational alt_power_sum_closed(unsigned m, unsigned long k)
{
    const Rational shifted = euler_poly(m, Rational(BigInt(k)));
    const Rational signed_shift = (k % 2 == 1) ? shifted : -shifted; // (-1)^(k+1)
    return (euler_number(m) + signed_shift) / Rational(2);
}

} // namespace qeuler::classical
