#include "mm/genfun.hpp"

#include <stdexcept>

#include "mm/meixner.hpp"

namespace mm {

SeriesZ::SeriesZ(std::size_t r, int order) : r_(r), order_(order)
{
    if (r == 0) throw std::invalid_argument("series needs at least one variable");
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

SeriesZ SeriesZ::one(std::size_t r, int order)
{
    SeriesZ s(r, order);
    s.set(MultiIndex(r), PolyX::constant(Rational(1)));
    return s;
}

SeriesZ SeriesZ::linear(const std::vector<Rational>& weights, int order)
{
    SeriesZ s(weights.size(), order);
    if (order == 0) return s;
    for (std::size_t k = 0; k < weights.size(); ++k) s.set(MultiIndex::unit(weights.size(), k), PolyX::constant(weights[k]));
    return s;
}

PolyX SeriesZ::coeff(const MultiIndex& n) const
{
    auto it = terms_.find(n);
    return it == terms_.end() ? PolyX() : it->second;
}

void SeriesZ::set(const MultiIndex& n, PolyX value)
{
    if (n.size() != r_) throw std::invalid_argument("series index has wrong length");
    if (n.total() > order_) throw std::invalid_argument("series index exceeds the truncation order");
    if (value.is_zero()) {
        terms_.erase(n);
    } else {
        terms_[n] = std::move(value);
    }
}

SeriesZ& SeriesZ::operator+=(const SeriesZ& o)
{
    if (o.r_ != r_ || o.order_ != order_) throw std::invalid_argument("series shape mismatch");
    for (const auto& [n, p] : o.terms_) set(n, coeff(n) + p);
    return *this;
}

SeriesZ SeriesZ::operator*(const PolyX& s) const
{
    SeriesZ out(r_, order_);
    for (const auto& [n, p] : terms_) out.set(n, p * s);
    return out;
}

SeriesZ series_mul(const SeriesZ& a, const SeriesZ& b)
{
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    if (a.r() != b.r()) throw std::invalid_argument("series_mul: variable count mismatch");
    std::map<MultiIndex, PolyX> acc;
    for (const auto& [na, pa] : a.terms()) {
        for (const auto& [nb, pb] : b.terms()) {
            if (na.total() + nb.total() > a.order()) continue;
            std::vector<int> sum(a.r());
            for (std::size_t k = 0; k < a.r(); ++k) sum[k] = na[k] + nb[k];
            acc[MultiIndex(std::move(sum))] += pa * pb;
        }
    }
    SeriesZ out(a.r(), a.order());
    for (auto& [n, p] : acc) out.set(n, std::move(p));
    return out;
}

SeriesZ binomial_series(const PolyX& exponent, const SeriesZ& u)
{
    if (!u.coeff(MultiIndex(u.r())).is_zero()) throw std::invalid_argument("binomial_series: u must vanish at z=0");
    SeriesZ result(u.r(), u.order());
    SeriesZ power = SeriesZ::one(u.r(), u.order());
    for (int m = 0; m <= u.order(); ++m) {
        result += power * binom_poly(exponent, static_cast<unsigned>(m));
        power = series_mul(power, u);
    }
    return result;
}

std::map<MultiIndex, PolyX> genfun_coeffs(const Params& params, int order)
{
    const std::size_t r = params.r();
    std::vector<Rational> u_weights(r);
    std::vector<Rational> v_weights(r);
    for (std::size_t k = 0; k < r; ++k) {
        u_weights[k] = params.inv_one_minus(k);
        v_weights[k] = params.gamma(k);
    }
    const PolyX x = PolyX::variable();
    // (1 + u)^x (1 + v)^(-x-beta)
    const SeriesZ first = binomial_series(x, SeriesZ::linear(u_weights, order));
    const SeriesZ second = binomial_series(-x - PolyX::constant(params.beta()), SeriesZ::linear(v_weights, order));
    const SeriesZ phi = series_mul(first, second);

    std::map<MultiIndex, PolyX> out;
    for (const auto& n : indices_up_to(r, order)) out.emplace(n, phi.coeff(n) * n.factorial());
    return out;
}

CheckSummary oracle_compare(const Params& params, int order)
{
    CheckSummary summary;
    summary.check = "genfun";
    summary.params = params_json(params);
    MeixnerTable table(params);
    for (const auto& [n, poly] : genfun_coeffs(params, order)) {
        RelationReport r;
        r.relation = "genfun";
        r.instance = {{"n", n}, {"order", order}};
        const PolyX& built = table.poly(n);
        r.pass = built == poly;
        r.lhs = poly;
        r.rhs = built;
        summary.add(std::move(r));
    }
    return summary;
}

}  // namespace mm
