#pragma once

#include <string>

#include "mm/polynomial.hpp"

namespace mm {

/// Rational function in an auxiliary variable c. Stored reduced
/// (gcd-free) with a monic denominator, so equality is structural.
class RatFuncC {
public:
    RatFuncC() : num_(), den_(Polynomial::constant(Rational(1))) {}
    /// Throws std::domain_error for a zero denominator.
    RatFuncC(Polynomial num, Polynomial den);
    explicit RatFuncC(Polynomial num) : RatFuncC(std::move(num), Polynomial::constant(Rational(1))) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws std::domain_error at a pole.
    Rational operator()(const Rational& c) const;
    RatFuncC derivative() const;

    RatFuncC operator+(const RatFuncC& o) const;
    RatFuncC operator-(const RatFuncC& o) const;
    RatFuncC operator*(const RatFuncC& o) const;

    /// Cross-multiplied comparison; valid even for unreduced inputs.
    friend bool operator==(const RatFuncC& a, const RatFuncC& b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string pretty() const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace mm
