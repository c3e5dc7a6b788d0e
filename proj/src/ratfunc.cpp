#include "mm/ratfunc.hpp"

#include <stdexcept>

namespace mm {

RatFuncC::RatFuncC(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("RatFuncC: zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
}

Rational RatFuncC::operator()(const Rational& c) const
{
    const Rational d = den_(c);
    if (d.is_zero()) throw std::domain_error("RatFuncC: evaluation at a pole c=" + c.str());
    return num_(c) / d;
}

RatFuncC RatFuncC::derivative() const
{
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RatFuncC RatFuncC::operator+(const RatFuncC& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }

RatFuncC RatFuncC::operator-(const RatFuncC& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }

RatFuncC RatFuncC::operator*(const RatFuncC& o) const { return {num_ * o.num_, den_ * o.den_}; }

std::string RatFuncC::pretty() const { return "(" + num_.pretty("c") + ")/(" + den_.pretty("c") + ")"; }

}  // namespace mm
