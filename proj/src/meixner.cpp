#include "mm/meixner.hpp"

#include <stdexcept>

namespace mm {

std::string_view to_string(PathRule rule)
{
    switch (rule) {
    case PathRule::canonical: return "canonical";
    case PathRule::reverse: return "reverse";
    case PathRule::balanced: return "balanced";
    case PathRule::scrambled: return "scrambled";
    }
    return "unknown";
}

MeixnerTable::MeixnerTable(Params params, PathRule rule) : params_(std::move(params)), rule_(rule) {}

Rational MeixnerTable::diagonal_coeff(const MultiIndex& n, std::size_t i) const
{
    const Rational total(n.total());
    Rational b = params_.gamma(i) * (params_.beta() + total);
    for (std::size_t k = 0; k < params_.r(); ++k) b += Rational(n[k]) * params_.inv_one_minus(k);
    if (n.total() >= 1) b += params_.recurrence_fault();
    return b;
}

Rational MeixnerTable::down_coeff(const MultiIndex& n, std::size_t k) const
{
    const Rational om = Rational(1) - params_.c(k);
    return params_.c(k) / (om * om) * Rational(n[k]) * (params_.beta() + Rational(n.total() - 1));
}

std::size_t MeixnerTable::step_coordinate(const MultiIndex& n) const
{
    const std::size_t r = n.size();
    switch (rule_) {
    case PathRule::canonical:
        for (std::size_t k = r; k-- > 0;)
            if (n[k] > 0) return k;
        break;
    case PathRule::reverse:
        for (std::size_t k = 0; k < r; ++k)
            if (n[k] > 0) return k;
        break;
    case PathRule::balanced: {
        std::size_t best = 0;
        for (std::size_t k = 1; k < r; ++k)
            if (n[k] > n[best]) best = k;
        return best;
    }
    case PathRule::scrambled: {
        std::size_t nonzero = 0;
        std::size_t h = 17;
        for (std::size_t k = 0; k < r; ++k) {
            if (n[k] > 0) ++nonzero;
            h = h * 31 + static_cast<std::size_t>(n[k]) * (2 * k + 3);
        }
        std::size_t pick = (h >> 3) % nonzero;
        for (std::size_t k = 0; k < r; ++k) {
            if (n[k] > 0 && pick-- == 0) return k;
        }
        break;
    }
    }
    throw std::logic_error("step_coordinate called on the zero index");
}

const PolyX& MeixnerTable::poly(const MultiIndex& n)
{
    if (n.size() != params_.r())
        throw std::invalid_argument("multi-index length " + std::to_string(n.size()) + " does not match r=" +
                                    std::to_string(params_.r()));
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;

    PolyX result;
    if (n.is_zero()) {
        result = PolyX::constant(Rational(1));
    } else {
        const std::size_t i = step_coordinate(n);
        const MultiIndex m = n.lowered(i);
        result = (PolyX::variable() - PolyX::constant(diagonal_coeff(m, i))) * poly(m);
        for (std::size_t k = 0; k < params_.r(); ++k) {
            if (m[k] == 0) continue;
            result -= poly(m.lowered(k)) * down_coeff(m, k);
        }
    }
    return memo_.emplace(n, std::move(result)).first->second;
}

TableFamily::TableFamily(Params base, PathRule rule) : base_(std::move(base)), rule_(rule) {}

MeixnerTable& TableFamily::shifted(int shift) { return at_beta(base_.beta() + Rational(shift)); }

MeixnerTable& TableFamily::at_beta(const Rational& beta)
{
    if (auto it = tables_.find(beta); it != tables_.end()) return it->second;
    return tables_.emplace(beta, MeixnerTable(base_.with_beta(beta), rule_)).first->second;
}

PolyX mm_poly(const Params& params, const MultiIndex& n)
{
    MeixnerTable table(params);
    return table.poly(n);
}

Rational mm_eval(const Params& params, const MultiIndex& n, const Rational& x) { return mm_poly(params, n)(x); }

}  // namespace mm
