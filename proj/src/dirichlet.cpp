#include "qeuler/dirichlet.hpp"

#include <numeric>

#include "qeuler/qzeta.hpp"

namespace qeuler {

namespace {

using Poly = std::vector<BigInt>; // coefficients, lowest degree first

Poly poly_divide_exact(Poly num, const Poly& den)
{
    // den is monic.
    const std::size_t dn = den.size() - 1;
    Poly quot(num.size() - dn, BigInt(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        const BigInt c = num[i];
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    return quot;
}

Poly cyclotomic_poly(unsigned long m)
{
    Poly p(m + 1, BigInt(0));
    p[0] = -1;
    p[m] = 1; // x^m - 1
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d == 0)
            p = poly_divide_exact(p, cyclotomic_poly(d));
    }
    return p;
}

unsigned long pow_mod(unsigned long base, unsigned long e, unsigned long mod)
{
    unsigned long long result = 1 % mod;
    unsigned long long b = base % mod;
    while (e > 0) {
        if (e & 1UL)
            result = result * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<unsigned long>(result);
}

std::vector<unsigned long> prime_divisors(unsigned long n)
{
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

// Smallest primitive root mod p, lifted so that it generates (Z/p^k)^* for every k.
unsigned long primitive_root(unsigned long p)
{
    const auto divisors = prime_divisors(p - 1);
    for (unsigned long g = 2; g < p; ++g) {
        bool generates = true;
        for (unsigned long r : divisors) {
            if (pow_mod(g, (p - 1) / r, p) == 1) {
                generates = false;
                break;
            }
        }
        if (generates)
            return pow_mod(g, p - 1, p * p) == 1 ? g + p : g;
    }
    return 1; // p = 2 never reaches here for odd moduli
}

std::vector<PrimePower> factor_odd(unsigned long d)
{
    std::vector<PrimePower> out;
    for (unsigned long p : prime_divisors(d)) {
        PrimePower pp{p, 0, 1, 0, 0};
        while (d % p == 0) {
            d /= p;
            pp.value *= p;
            ++pp.exponent;
        }
        pp.totient = pp.value / p * (p - 1);
        pp.generator = primitive_root(p);
        out.push_back(pp);
    }
    return out;
}

unsigned long lcm_all(const std::vector<PrimePower>& factors)
{
    unsigned long l = 1;
    for (const auto& f : factors)
        l = std::lcm(l, f.totient);
    return l;
}

// Discrete logarithm table for each component: logs[i][r] = log_g(r) mod value_i.
std::vector<std::vector<std::optional<unsigned long>>> discrete_logs(const std::vector<PrimePower>& factors)
{
    std::vector<std::vector<std::optional<unsigned long>>> logs;
    for (const auto& f : factors) {
        std::vector<std::optional<unsigned long>> table(f.value);
        unsigned long x = 1;
        for (unsigned long i = 0; i < f.totient; ++i) {
            table[x] = i;
            x = x * f.generator % f.value;
        }
        logs.push_back(std::move(table));
    }
    return logs;
}

// Reduce exponents in Z/L to the character's true order.
DirichletCharacter reduce_character(unsigned long d, unsigned long l, std::vector<std::optional<unsigned long>> exps,
                                    std::vector<unsigned long> tuple)
{
    unsigned long g = l;
    for (const auto& e : exps) {
        if (e)
            g = std::gcd(g, *e);
    }
    const unsigned long order = l / g;
    for (auto& e : exps) {
        if (e)
            *e /= g;
    }
    return DirichletCharacter(d, order, std::move(exps), std::move(tuple));
}

} // namespace

// ---------------------------------------------------------------------------

CyclotomicValue::CyclotomicValue(unsigned long order) : order_(order), coeffs_(order)
{
    if (order == 0)
        throw DomainError("cyclotomic order must be positive");
}

void CyclotomicValue::add(unsigned long exponent, const Rational& c)
{
    coeffs_[exponent % order_] += c;
}

CyclotomicValue& CyclotomicValue::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

std::vector<Rational> CyclotomicValue::reduced() const
{
    const Poly phi = cyclotomic_poly(order_);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> r = coeffs_;
    for (std::size_t i = r.size(); i-- > deg;) {
        const Rational c = r[i];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j <= deg; ++j)
            r[i - deg + j] -= c * Rational(phi[j]);
    }
    r.resize(deg);
    return r;
}

std::optional<Rational> CyclotomicValue::as_rational() const
{
    const auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (!r[i].is_zero())
            return std::nullopt;
    }
    return r.empty() ? Rational() : r[0];
}

std::optional<std::pair<Rational, Rational>> CyclotomicValue::as_gaussian() const
{
    if (4 % order_ != 0)
        return std::nullopt;
    Rational re;
    Rational im;
    for (unsigned long e = 0; e < order_; ++e) {
        switch ((4 * e / order_) % 4) {
        case 0: re += coeffs_[e]; break;
        case 1: im += coeffs_[e]; break;
        case 2: re -= coeffs_[e]; break;
        default: im -= coeffs_[e]; break;
        }
    }
    return std::make_pair(re, im);
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b)
{
    if (a.order_ == b.order_)
        return a.reduced() == b.reduced();
    // Lift both into the common field Q(zeta_L).
    const unsigned long l = std::lcm(a.order_, b.order_);
    CyclotomicValue la(l);
    CyclotomicValue lb(l);
    for (unsigned long e = 0; e < a.order_; ++e)
        la.add(e * (l / a.order_), a.coeffs_[e]);
    for (unsigned long e = 0; e < b.order_; ++e)
        lb.add(e * (l / b.order_), b.coeffs_[e]);
    return la.reduced() == lb.reduced();
}

Real abs(const ComplexReal& z)
{
    Real r = z.re;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

ComplexReal root_of_unity(unsigned long e, unsigned long m, int digits)
{
    e %= m;
    if ((4 * e) % m == 0) {
        switch (4 * e / m) {
        case 0: return {Real(1L, digits), Real(0L, digits)};
        case 1: return {Real(0L, digits), Real(1L, digits)};
        case 2: return {Real(-1L, digits), Real(0L, digits)};
        default: return {Real(0L, digits), Real(-1L, digits)};
        }
    }
    Real angle = Real::zero(digits);
    mpfr_const_pi(angle.raw(), MPFR_RNDN);
    mpfr_mul_ui(angle.raw(), angle.raw(), 2 * e, MPFR_RNDN);
    mpfr_div_ui(angle.raw(), angle.raw(), m, MPFR_RNDN);
    ComplexReal z{Real::zero(digits), Real::zero(digits)};
    mpfr_sin_cos(z.im.raw(), z.re.raw(), angle.raw(), MPFR_RNDN);
    return z;
}

ComplexReal to_complex(const CyclotomicValue& v, int digits)
{
    ComplexReal z{Real::zero(digits), Real::zero(digits)};
    for (unsigned long e = 0; e < v.order(); ++e) {
        const Rational& c = v.coefficients()[e];
        if (c.is_zero())
            continue;
        const ComplexReal w = root_of_unity(e, v.order(), digits);
        const Real cr(c, digits);
        z.re += cr * w.re;
        z.im += cr * w.im;
    }
    return z;
}

// ---------------------------------------------------------------------------

DirichletCharacter::DirichletCharacter(unsigned long modulus, unsigned long order,
                                       std::vector<std::optional<unsigned long>> exponents,
                                       std::vector<unsigned long> index_tuple)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)), index_tuple_(std::move(index_tuple))
{
}

std::optional<unsigned long> DirichletCharacter::exponent(long a) const
{
    const auto d = static_cast<long>(modulus_);
    return exponents_[static_cast<std::size_t>(((a % d) + d) % d)];
}

ComplexReal DirichletCharacter::value(long a, int digits) const
{
    const auto e = exponent(a);
    if (!e)
        return {Real(0L, digits), Real(0L, digits)};
    return root_of_unity(*e, order_, digits);
}

const DirichletCharacter& CharacterGroup::at(std::size_t index) const
{
    if (index >= characters_.size())
        throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                          std::to_string(modulus_) + " (" + std::to_string(characters_.size()) + " characters)");
    return characters_[index];
}

DirichletCharacter CharacterGroup::multiply(const DirichletCharacter& a, const DirichletCharacter& b) const
{
    if (a.modulus() != modulus_ || b.modulus() != modulus_)
        throw DomainError("characters of different moduli");
    const unsigned long l = lcm_all(factors_);
    std::vector<std::optional<unsigned long>> exps(modulus_);
    for (unsigned long r = 0; r < modulus_; ++r) {
        const auto ea = a.exponents()[r];
        const auto eb = b.exponents()[r];
        if (ea && eb)
            exps[r] = (*ea * (l / a.order()) + *eb * (l / b.order())) % l;
    }
    std::vector<unsigned long> tuple(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        tuple[i] = (a.index_tuple()[i] + b.index_tuple()[i]) % factors_[i].totient;
    return reduce_character(modulus_, l, std::move(exps), std::move(tuple));
}

unsigned long totient(unsigned long n)
{
    unsigned long result = n;
    for (unsigned long p : prime_divisors(n))
        result = result / p * (p - 1);
    return result;
}

CharacterGroup characters_mod(unsigned long d)
{
    if (d == 0 || d % 2 == 0)
        throw DomainError("character modulus must be odd and positive, got " + std::to_string(d));

    auto factors = factor_odd(d);
    const auto logs = discrete_logs(factors);
    const unsigned long l = lcm_all(factors);
    const unsigned long count = totient(d);

    std::vector<DirichletCharacter> characters;
    characters.reserve(count);
    std::vector<unsigned long> tuple(factors.size(), 0);
    for (unsigned long idx = 0; idx < count; ++idx) {
        // Mixed-radix decode; the first factor is the most significant digit.
        unsigned long rest = idx;
        for (std::size_t i = factors.size(); i-- > 0;) {
            tuple[i] = rest % factors[i].totient;
            rest /= factors[i].totient;
        }
        std::vector<std::optional<unsigned long>> exps(d);
        for (unsigned long a = 0; a < d; ++a) {
            if (std::gcd(a, d) != 1)
                continue;
            unsigned long e = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const unsigned long lg = *logs[i][a % factors[i].value];
                e = (e + (tuple[i] * lg % factors[i].totient) * (l / factors[i].totient)) % l;
            }
            exps[a] = e;
        }
        characters.push_back(reduce_character(d, l, std::move(exps), tuple));
    }
    return CharacterGroup(d, std::move(factors), std::move(characters));
}

CyclotomicValue generalized_q_euler(unsigned n, const DirichletCharacter& chi, const Rational& q)
{
    const QBase base = QBase::zeta(q);
    const unsigned long d = chi.modulus();
    const QBase qd = base.power(d);
    const auto d_signed = static_cast<long>(d);
    CyclotomicValue acc(chi.order());
    for (long a = 0; a < d_signed; ++a) {
        const auto e = chi.exponent(a);
        if (!e)
            continue;
        // (q^d)^(a/d) = q^a
        const auto at = QPower::with_value(qd, pow(q, a), Rational(a, d_signed));
        const Rational value = q_euler_poly(n, at);
        acc.add(*e, a % 2 == 0 ? value : -value);
    }
    acc *= pow(q_int(d, base), n);
    return acc;
}

ComplexReal l_function(const Real& s, const DirichletCharacter& chi, const Rational& q, int digits)
{
    const QBase base = QBase::zeta(q);
    const unsigned long d = chi.modulus();
    // Group the residue classes by character exponent, then rotate once per exponent.
    std::vector<std::optional<Real>> by_exponent(chi.order());
    for (unsigned long a = 1; a <= d; ++a) {
        const auto e = chi.exponent(static_cast<long>(a));
        if (!e)
            continue;
        Real h = detail::residue_class_zeta(s, a, d, base, digits);
        auto& slot = by_exponent[*e];
        slot = slot ? *slot + h : h;
    }
    ComplexReal z{Real::zero(digits), Real::zero(digits)};
    for (unsigned long e = 0; e < chi.order(); ++e) {
        if (!by_exponent[e])
            continue;
        const ComplexReal w = root_of_unity(e, chi.order(), digits);
        z.re += *by_exponent[e] * w.re;
        z.im += *by_exponent[e] * w.im;
    }
    return {z.re.rounded(digits), z.im.rounded(digits)};
}

CyclotomicValue l_function_special_value(unsigned n, const DirichletCharacter& chi, const Rational& q)
{
    const QBase base = QBase::zeta(q);
    const unsigned long d = chi.modulus();
    CyclotomicValue acc(chi.order());
    for (unsigned long a = 1; a <= d; ++a) {
        const auto e = chi.exponent(static_cast<long>(a));
        if (e)
            acc.add(*e, detail::residue_class_special_value(n, a, d, base));
    }
    return acc;
}

} // namespace qeuler
