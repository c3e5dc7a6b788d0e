#pragma once

#include <map>
#include <string_view>

#include "mm/params.hpp"
#include "mm/polynomial.hpp"

namespace mm {

/// Which coordinate the last recurrence step increments when building M_n.
/// Every rule yields the same polynomials; distinct rules give distinct
/// construction paths, which is what the path-independence check compares.
enum class PathRule {
    canonical,  ///< increment coordinate 1 fully, then 2, ...: last step in the highest nonzero coordinate
    reverse,    ///< last step in the lowest nonzero coordinate
    balanced,   ///< last step in the largest coordinate (ties: lowest)
    scrambled,  ///< index-dependent pseudo-random nonzero coordinate
};

std::string_view to_string(PathRule rule);

/// Memoized monic multiple Meixner polynomials of the first kind for one
/// parameter set, built from the nearest-neighbour recurrence
///   x M_n = M_{n+e_i} + b_i(n) M_n + sum_k d_k(n) M_{n-e_k}.
///
/// Not thread-safe while filling; a table that is no longer extended can be
/// read concurrently.
class MeixnerTable {
public:
    explicit MeixnerTable(Params params, PathRule rule = PathRule::canonical);

    const Params& params() const { return params_; }
    PathRule rule() const { return rule_; }

    /// M_n(x). Throws std::invalid_argument when n has the wrong length.
    const PolyX& poly(const MultiIndex& n);
    Rational eval(const MultiIndex& n, const Rational& x) { return poly(n)(x); }

    /// b_i(n) = c_i/(1-c_i) (beta+|n|) + sum_k n_k/(1-c_k)
    Rational diagonal_coeff(const MultiIndex& n, std::size_t i) const;
    /// d_k(n) = c_k/(1-c_k)^2 n_k (beta+|n|-1)
    Rational down_coeff(const MultiIndex& n, std::size_t k) const;

    std::size_t size() const { return memo_.size(); }

private:
    std::size_t step_coordinate(const MultiIndex& n) const;

    Params params_;
    PathRule rule_;
    std::map<MultiIndex, PolyX> memo_;
};

/// Sibling tables of one family at beta, beta +- 1, ... (same c, same rule).
class TableFamily {
public:
    explicit TableFamily(Params base, PathRule rule = PathRule::canonical);

    const Params& params() const { return base_; }
    /// Table at base beta + shift. Throws std::invalid_argument if that beta is not > 0.
    MeixnerTable& shifted(int shift);
    /// Table at an arbitrary beta (> 0) with the family's c.
    MeixnerTable& at_beta(const Rational& beta);
    MeixnerTable& base() { return shifted(0); }

private:
    Params base_;
    PathRule rule_;
    std::map<Rational, MeixnerTable> tables_;
};

/// M_n^{beta,c}(x) via the canonical path in a fresh table.
PolyX mm_poly(const Params& params, const MultiIndex& n);
Rational mm_eval(const Params& params, const MultiIndex& n, const Rational& x);

}  // namespace mm
