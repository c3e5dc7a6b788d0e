#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mm/rational.hpp"

namespace mm {

/// Dense univariate polynomial over the rationals, coefficients lowest power
/// first. Trailing zeros are stripped on construction, so the zero polynomial
/// has no coefficients and structural equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// The monomial `coeff * var^power`.
    static Polynomial monomial(std::size_t power, const Rational& coeff = Rational(1));
    /// The polynomial `var`.
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
    Rational leading() const;
    /// Coefficient of var^k (zero beyond the degree).
    Rational operator[](std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& t) const;  // Horner
    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form in the given variable name, e.g. "x^2 - 5*x + 2".
    std::string pretty(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Euclidean division; throws std::domain_error when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Spectral-variable polynomial. Kept as an alias: every polynomial in x is
/// an ordinary univariate polynomial.
using PolyX = Polynomial;

/// Basic ring operation selector used by the CLI-facing `poly_arith`.
enum class ArithKind { add, sub, mul };
PolyX poly_arith(const PolyX& a, const PolyX& b, ArithKind kind);

/// q(x) = p(x + s), by Taylor shift.
PolyX poly_shift(const PolyX& p, const Rational& s);

/// e (e-1) ... (e-m+1) / m!, with binom_poly(e, 0) = 1.
PolyX binom_poly(const PolyX& e, unsigned m);

/// Rising factorial (b)_k = b (b+1) ... (b+k-1); (b)_0 = 1.
Rational pochhammer(const Rational& b, unsigned k);

}  // namespace mm
