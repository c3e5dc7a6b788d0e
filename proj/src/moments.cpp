#include "mm/moments.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm {

namespace {

void require_measure(const Rational& beta, const Rational& c)
{
    if (beta.sign() <= 0) throw std::invalid_argument("beta must be > 0");
    if (c.sign() <= 0 || c >= Rational(1)) throw std::invalid_argument("c must lie in (0,1)");
}

// Cauchy bound: every root rho of p has |rho| < 1 + max_k |a_k / a_d|.
Rational root_bound(const PolyX& p)
{
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, p[static_cast<std::size_t>(k)].abs() / lead);
    return Rational(1) + m;
}

}  // namespace

MomentVector::MomentVector(Rational beta) : beta_(std::move(beta))
{
    if (beta_.sign() <= 0) throw std::invalid_argument("beta must be > 0");
    g_.emplace_back(Polynomial::constant(Rational(1)));
}

const RatFuncC& MomentVector::ratio(std::size_t j)
{
    const Polynomial c = Polynomial::variable();
    const RatFuncC c_rf(c);
    // beta c / (1 - c)
    const RatFuncC drift(c * beta_, Polynomial{Rational(1), Rational(-1)});
    while (g_.size() <= j) {
        const RatFuncC& g = g_.back();
        g_.push_back(c_rf * g.derivative() + drift * g);
    }
    return g_[j];
}

Rational moment_ratio(const Rational& beta, const Rational& c, std::size_t j)
{
    require_measure(beta, c);
    MomentVector moments(beta);
    return moments.ratio(j)(c);
}

Rational orthogonality_contraction(MeixnerTable& table, const MultiIndex& n, std::size_t i, std::size_t j)
{
    const Params& p = table.params();
    const PolyX integrand = table.poly(n) * PolyX::monomial(j);
    MomentVector moments(p.beta());
    Rational acc(0);
    for (std::size_t k = 0; k < integrand.coeffs().size(); ++k) {
        if (integrand[k].is_zero()) continue;
        acc += integrand[k] * moments.ratio(k)(p.c(i));
    }
    return acc;
}

RelationReport orthogonality_check(MeixnerTable& table, const MultiIndex& n, std::size_t i)
{
    if (i >= n.size() || n[i] < 1) throw std::invalid_argument("orthogonality check requires n_i >= 1");
    RelationReport r;
    r.relation = "orthogonality";
    r.pass = true;
    r.rhs = "0";
    for (int j = 0; j < n[i]; ++j) {
        const Rational value = orthogonality_contraction(table, n, i, static_cast<std::size_t>(j));
        r.instance = {{"n", n}, {"i", one_based(i)}, {"j", j}};
        r.lhs = value;
        if (!value.is_zero()) {
            r.pass = false;
            return r;
        }
    }
    r.instance.erase("j");
    return r;
}

TruncatedSum weighted_partial_sum(const PolyX& poly, const Rational& beta, const Rational& c, int x_max)
{
    require_measure(beta, c);
    if (x_max < 0) throw std::invalid_argument("x_max must be non-negative");

    // weight(x) = (beta)_x c^x / x!
    Rational weight(1);
    Rational value(0);
    for (int x = 0; x <= x_max; ++x) {
        value += poly(Rational(x)) * weight;
        weight *= c * (beta + Rational(x)) / Rational(x + 1);
    }
    if (poly.is_zero()) return {value, Rational(0), Rational(0)};

    // Tail terms t_x, x >= X, satisfy |t_{x+1}/t_x| <= q for
    //   q = (1 + 1/(X-R))^d * sup_{x>=X} c(beta+x)/(x+1), R a root bound of P.
    const Rational first_tail(x_max + 1);
    const int degree = poly.degree();
    Rational growth(1);
    if (degree > 0) {
        const Rational bound = root_bound(poly);
        if (first_tail <= bound)
            throw std::invalid_argument("x_max too small: below the polynomial root bound " + bound.str());
        growth = pow(Rational(1) + Rational(1) / (first_tail - bound), degree);
    }
    const Rational weight_ratio =
        beta >= Rational(1) ? c * (beta + first_tail) / (first_tail + Rational(1)) : c;
    const Rational q = growth * weight_ratio;
    if (q >= Rational(1)) throw std::invalid_argument("x_max too small: term-ratio bound " + q.str() + " >= 1");

    const Rational first_term = (poly(first_tail) * weight).abs();
    return {value, first_term / (Rational(1) - q), q};
}

TruncatedSum truncated_sum_check(MeixnerTable& table, const MultiIndex& n, std::size_t i, std::size_t j, int x_max)
{
    if (i >= n.size()) throw std::invalid_argument("index i out of range");
    if (static_cast<int>(j) >= n[i]) throw std::invalid_argument("truncated sum requires j < n_i");
    const Params& p = table.params();
    return weighted_partial_sum(table.poly(n) * PolyX::monomial(j), p.beta(), p.c(i), x_max);
}

}  // namespace mm
