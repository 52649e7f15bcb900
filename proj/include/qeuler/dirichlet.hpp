#pragma once

// Dirichlet characters of odd modulus, stored exactly as root-of-unity
// exponents, together with the generalized q-Euler numbers E_{n,chi,q} and
// the q-L-function l_{E,q}(s, chi).

#include <optional>
#include <string>
#include <vector>

#include "qeuler/exactnum.hpp"
#include "qeuler/qeuler.hpp"

namespace qeuler {

/// Element of Q(zeta_m) held as sum_e c_e zeta_m^e, e = 0..m-1.
class CyclotomicValue {
public:
    explicit CyclotomicValue(unsigned long order);

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    void add(unsigned long exponent, const Rational& c);
    CyclotomicValue& operator*=(const Rational& c);

    /// Coefficients in the power basis 1..zeta^(phi(m)-1), i.e. reduced
    /// modulo the m-th cyclotomic polynomial. Canonical for equality.
    std::vector<Rational> reduced() const;

    /// The value as a rational number when it lies in Q.
    std::optional<Rational> as_rational() const;

    /// (re, im) when m divides 4, so both parts are rational.
    std::optional<std::pair<Rational, Rational>> as_gaussian() const;

    friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

private:
    unsigned long order_;
    std::vector<Rational> coeffs_;
};

struct ComplexReal {
    Real re;
    Real im;
};

Real abs(const ComplexReal& z);
ComplexReal to_complex(const CyclotomicValue& v, int digits);

/// exp(2 pi i e / m) at precision `digits`; exact for 4e divisible by m.
ComplexReal root_of_unity(unsigned long e, unsigned long m, int digits);

class DirichletCharacter {
public:
    DirichletCharacter(unsigned long modulus, unsigned long order, std::vector<std::optional<unsigned long>> exponents,
                       std::vector<unsigned long> index_tuple);

    unsigned long modulus() const { return modulus_; }
    unsigned long order() const { return order_; }

    /// exponents()[a] is empty when gcd(a, d) > 1, otherwise e with chi(a) = exp(2 pi i e / order).
    const std::vector<std::optional<unsigned long>>& exponents() const { return exponents_; }
    std::optional<unsigned long> exponent(long a) const;

    /// Per prime-power component choice, in increasing prime order.
    const std::vector<unsigned long>& index_tuple() const { return index_tuple_; }

    bool is_principal() const { return order_ == 1; }
    bool is_real() const { return order_ <= 2; }

    ComplexReal value(long a, int digits) const;

    friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

private:
    unsigned long modulus_;
    unsigned long order_;
    std::vector<std::optional<unsigned long>> exponents_;
    std::vector<unsigned long> index_tuple_;
};

struct PrimePower {
    unsigned long prime;
    unsigned exponent;
    unsigned long value;     // prime^exponent
    unsigned long totient;   // phi(value)
    unsigned long generator; // primitive root mod value
};

class CharacterGroup {
public:
    CharacterGroup(unsigned long modulus, std::vector<PrimePower> factors, std::vector<DirichletCharacter> characters)
        : modulus_(modulus), factors_(std::move(factors)), characters_(std::move(characters))
    {
    }

    unsigned long modulus() const { return modulus_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    const std::vector<DirichletCharacter>& characters() const { return characters_; }
    std::size_t size() const { return characters_.size(); }
    const DirichletCharacter& at(std::size_t index) const;

    /// Pointwise product; its index tuple is the componentwise sum.
    DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) const;

private:
    unsigned long modulus_;
    std::vector<PrimePower> factors_;
    std::vector<DirichletCharacter> characters_;
};

unsigned long totient(unsigned long n);

/// All phi(d) characters mod odd d >= 1, ordered lexicographically by
/// index_tuple(); index 0 is the principal character.
CharacterGroup characters_mod(unsigned long d);

/// E_{n,chi,q} = [d]_q^n sum_{a=0}^{d-1} chi(a) (-1)^a E_{n,q^d}(a/d), exact in Q(zeta_m).
CyclotomicValue generalized_q_euler(unsigned n, const DirichletCharacter& chi, const Rational& q);

/// l_{E,q}(s, chi) = sum_{a=1}^{d} chi(a) H_q(s, a; d).
ComplexReal l_function(const Real& s, const DirichletCharacter& chi, const Rational& q, int digits = kDefaultDigits);

/// l_{E,q}(-n, chi) through the exact partial-zeta special values.
CyclotomicValue l_function_special_value(unsigned n, const DirichletCharacter& chi, const Rational& q);

} // namespace qeuler
