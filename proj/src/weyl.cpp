#include "mm/weyl.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mm {

namespace {

// n (n-1) ... (n-k+1)
Rational falling(int n, int k)
{
    Rational out(1);
    for (int t = 0; t < k; ++t) out *= Rational(n - t);
    return out;
}

Rational binomial(int n, int k) { return falling(n, k) / factorial(static_cast<unsigned>(k)); }

}  // namespace

WeylOp WeylOp::scalar(std::size_t modes, const Rational& s)
{
    WeylOp op(modes);
    op.add_term(MultiIndex(modes), MultiIndex(modes), s);
    return op;
}

WeylOp WeylOp::annihilate(std::size_t modes, std::size_t i)
{
    WeylOp op(modes);
    op.add_term(MultiIndex(modes), MultiIndex::unit(modes, i), Rational(1));
    return op;
}

WeylOp WeylOp::create(std::size_t modes, std::size_t i)
{
    WeylOp op(modes);
    op.add_term(MultiIndex::unit(modes, i), MultiIndex(modes), Rational(1));
    return op;
}

void WeylOp::add_term(const MultiIndex& raise, const MultiIndex& lower, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Word{raise, lower}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int WeylOp::degree_raise() const
{
    int best = std::numeric_limits<int>::min();
    for (const auto& [word, c] : terms_) best = std::max(best, word.first.total() - word.second.total());
    return terms_.empty() ? 0 : best;
}

std::map<MultiIndex, Rational> WeylOp::apply(const MultiIndex& n) const
{
    std::map<MultiIndex, Rational> out;
    for (const auto& [word, c] : terms_) {
        const auto& [raise, lower] = word;
        Rational coeff = c;
        std::vector<int> target(modes_);
        bool vanishes = false;
        for (std::size_t k = 0; k < modes_; ++k) {
            if (lower[k] > n[k]) {
                vanishes = true;
                break;
            }
            coeff *= falling(n[k], lower[k]);
            target[k] = n[k] - lower[k] + raise[k];
        }
        if (vanishes) continue;
        auto [it, inserted] = out.emplace(MultiIndex(std::move(target)), coeff);
        if (!inserted) it->second += coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

FockMatrix WeylOp::to_matrix(const BasisPtr& basis) const
{
    if (basis->modes() != modes_) throw std::invalid_argument("operator and basis disagree on the number of modes");
    FockMatrix m(basis);
    for (std::size_t col = 0; col < basis->size(); ++col) {
        for (const auto& [target, c] : apply(basis->state(col))) {
            if (auto row = basis->find(target)) m.add(*row, col, c);
        }
    }
    return m;
}

WeylOp WeylOp::operator-() const
{
    WeylOp out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

WeylOp& WeylOp::operator+=(const WeylOp& o)
{
    if (o.modes_ != modes_) throw std::invalid_argument("operators act on different numbers of modes");
    for (const auto& [w, c] : o.terms_) add_term(w.first, w.second, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o)
{
    if (o.modes_ != modes_) throw std::invalid_argument("operators act on different numbers of modes");
    for (const auto& [w, c] : o.terms_) add_term(w.first, w.second, -c);
    return *this;
}

WeylOp& WeylOp::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b)
{
    if (a.modes_ != b.modes_) throw std::invalid_argument("operators act on different numbers of modes");
    const std::size_t r = a.modes_;
    WeylOp out(r);
    // d^g z^s = sum_t C(g,t) s!/(s-t)! z^(s-t) d^(g-t), coordinatewise.
    for (const auto& [wa, ca] : a.terms_) {
        const auto& [ra, la] = wa;
        for (const auto& [wb, cb] : b.terms_) {
            const auto& [rb, lb] = wb;
            std::vector<int> t(r, 0);
            while (true) {
                Rational coeff = ca * cb;
                std::vector<int> raise(r);
                std::vector<int> lower(r);
                for (std::size_t k = 0; k < r; ++k) {
                    coeff *= binomial(la[k], t[k]) * falling(rb[k], t[k]);
                    raise[k] = ra[k] + rb[k] - t[k];
                    lower[k] = la[k] - t[k] + lb[k];
                }
                out.add_term(MultiIndex(std::move(raise)), MultiIndex(std::move(lower)), coeff);
                // odometer over 0 <= t_k <= min(la_k, rb_k)
                std::size_t k = 0;
                while (k < r) {
                    if (t[k] < std::min(la[k], rb[k])) {
                        ++t[k];
                        break;
                    }
                    t[k] = 0;
                    ++k;
                }
                if (k == r) break;
            }
        }
    }
    return out;
}

std::string WeylOp::pretty() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (std::size_t k = 0; k < modes_; ++k) {
            if (w.first[k] > 0) os << " ad" << k + 1 << (w.first[k] > 1 ? "^" + std::to_string(w.first[k]) : "");
        }
        for (std::size_t k = 0; k < modes_; ++k) {
            if (w.second[k] > 0) os << " a" << k + 1 << (w.second[k] > 1 ? "^" + std::to_string(w.second[k]) : "");
        }
    }
    return os.str();
}

}  // namespace mm
