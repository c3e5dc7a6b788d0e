#pragma once

#include <map>
#include <string>
#include <utility>

#include "mm/fock.hpp"

namespace mm {

/// Element of the r-mode oscillator algebra in normal order:
///   sum  coeff * (a+)^raise  a^lower,
/// realized on Bargmann polynomials as z^raise d^lower. Products are
/// normal-ordered exactly, so composite operators never pass through a
/// truncated matrix.
class WeylOp {
public:
    using Word = std::pair<MultiIndex, MultiIndex>;  // (raise, lower)

    explicit WeylOp(std::size_t modes) : modes_(modes) {}

    static WeylOp scalar(std::size_t modes, const Rational& s);
    static WeylOp identity(std::size_t modes) { return scalar(modes, Rational(1)); }
    static WeylOp annihilate(std::size_t modes, std::size_t i);
    static WeylOp create(std::size_t modes, std::size_t i);

    std::size_t modes() const { return modes_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Largest |raise| - |lower| over the terms (how far the operator can raise the degree).
    int degree_raise() const;

    /// Action on z^n (untruncated): map from target monomial to coefficient.
    std::map<MultiIndex, Rational> apply(const MultiIndex& n) const;
    /// Matrix on the truncated basis, built column by column from the action;
    /// components beyond the basis are dropped.
    FockMatrix to_matrix(const BasisPtr& basis) const;

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp& operator*=(const Rational& s);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(WeylOp a, const Rational& s) { return a *= s; }
    friend WeylOp operator*(const Rational& s, WeylOp a) { return a *= s; }
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
    friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.terms_ == b.terms_; }

    std::string pretty() const;

private:
    void add_term(const MultiIndex& raise, const MultiIndex& lower, const Rational& c);

    std::size_t modes_;
    std::map<Word, Rational> terms_;
};

inline WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

}  // namespace mm
