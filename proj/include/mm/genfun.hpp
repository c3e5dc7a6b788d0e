#pragma once

#include <map>

#include "mm/params.hpp"
#include "mm/polynomial.hpp"
#include "mm/report.hpp"

namespace mm {

/// Truncated power series in z_1..z_r with coefficients in Q[x].
/// Only multi-indices with |n| <= order are stored; absent means zero.
class SeriesZ {
public:
    SeriesZ(std::size_t r, int order);

    static SeriesZ one(std::size_t r, int order);
    /// sum_k weights[k] z_k
    static SeriesZ linear(const std::vector<Rational>& weights, int order);

    std::size_t r() const { return r_; }
    int order() const { return order_; }
    const std::map<MultiIndex, PolyX>& terms() const { return terms_; }

    PolyX coeff(const MultiIndex& n) const;
    /// Throws std::invalid_argument if |n| exceeds the order.
    void set(const MultiIndex& n, PolyX value);

    SeriesZ& operator+=(const SeriesZ& o);
    SeriesZ operator*(const PolyX& s) const;

    friend bool operator==(const SeriesZ&, const SeriesZ&) = default;

private:
    std::size_t r_;
    int order_;
    std::map<MultiIndex, PolyX> terms_;
};

/// Cauchy product truncated at the common order. Throws std::invalid_argument on order or r mismatch.
SeriesZ series_mul(const SeriesZ& a, const SeriesZ& b);

/// sum_{m <= order} binom_poly(e, m) * u^m for a series u without constant term.
SeriesZ binomial_series(const PolyX& exponent, const SeriesZ& u);

/// Coefficients of the generating function times n_1! ... n_r!, for all |n| <= order.
std::map<MultiIndex, PolyX> genfun_coeffs(const Params& params, int order);

/// Exact comparison of genfun_coeffs against the recurrence tables.
CheckSummary oracle_compare(const Params& params, int order);

}  // namespace mm
