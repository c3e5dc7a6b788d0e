#pragma once

#include <vector>

#include "mm/meixner.hpp"
#include "mm/ratfunc.hpp"
#include "mm/report.hpp"

namespace mm {

/// Normalized moments of the measure sum_x (beta)_x c^x / x! delta_x.
///
/// With m_j = sum_x x^j (beta)_x c^x/x! and m_0 = (1-c)^(-beta), the ratios
/// G_j = m_j / m_0 are rational functions of c obeying
///   G_0 = 1,   G_{j+1} = c G_j' + (beta c/(1-c)) G_j,
/// since (c d/dc) m_j = m_{j+1}. Orthogonality then reduces to finite
/// rational identities.
class MomentVector {
public:
    explicit MomentVector(Rational beta);

    const Rational& beta() const { return beta_; }
    /// G_j as a rational function of c (extends the cache as needed).
    const RatFuncC& ratio(std::size_t j);

private:
    Rational beta_;
    std::vector<RatFuncC> g_;
};

/// G_j(c) = m_j / m_0. Requires 0 < c < 1 and beta > 0.
Rational moment_ratio(const Rational& beta, const Rational& c, std::size_t j);

/// sum_x M_n(x) x^j w_i(x) reduced to sum_k coeff_k G_k(c_i) (the common
/// factor (1-c_i)^(-beta) dropped).
Rational orthogonality_contraction(MeixnerTable& table, const MultiIndex& n, std::size_t i, std::size_t j);

/// Every j in 0..n_i-1 contracts to exactly zero. Requires n_i >= 1.
RelationReport orthogonality_check(MeixnerTable& table, const MultiIndex& n, std::size_t i);

struct TruncatedSum {
    Rational value;      ///< exact partial sum up to x_max
    Rational tail_bound; ///< rigorous bound on |sum_{x > x_max}|
    Rational ratio_bound;
};

/// Partial sum sum_{x=0}^{x_max} M_n(x) x^j (beta)_x c_i^x / x! with a geometric
/// tail bound. Requires j < n_i; throws std::invalid_argument when the term-ratio
/// bound at x_max is not below 1 (truncation point too small).
TruncatedSum truncated_sum_check(MeixnerTable& table, const MultiIndex& n, std::size_t i, std::size_t j, int x_max);

/// Same machinery for an arbitrary polynomial weight factor P:
/// sum_{x=0}^{x_max} P(x) (beta)_x c^x / x!.
TruncatedSum weighted_partial_sum(const PolyX& poly, const Rational& beta, const Rational& c, int x_max);

}  // namespace mm
