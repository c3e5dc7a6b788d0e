#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mm/rational.hpp"

namespace mm {

/// Label n = (n_1, ..., n_r) of a multiple orthogonal polynomial.
/// Coordinates are zero-based in the C++ API.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t r) : entries_(r, 0) {}
    /// Throws std::invalid_argument on a negative entry.
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

    static MultiIndex unit(std::size_t r, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<int>& entries() const { return entries_; }
    int total() const;
    bool is_zero() const { return total() == 0; }

    MultiIndex raised(std::size_t k) const;
    /// Throws std::invalid_argument when coordinate k is already zero.
    MultiIndex lowered(std::size_t k) const;
    /// n_1! ... n_r!
    Rational factorial() const;

    /// Comma-separated, e.g. "2,1".
    std::string str() const;

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

/// All multi-indices with r coordinates and total degree <= max_total,
/// degree-major; within a degree, higher powers of earlier coordinates come first.
std::vector<MultiIndex> indices_up_to(std::size_t r, int max_total);
/// All multi-indices with r coordinates and total degree exactly `total`, same order.
std::vector<MultiIndex> indices_of_degree(std::size_t r, int total);

/// Family parameters (r, beta, c_1..c_r): beta > 0, 0 < c_i < 1, c_i pairwise distinct.
class Params {
public:
    /// Throws std::invalid_argument when an invariant is violated.
    Params(Rational beta, std::vector<Rational> c);

    std::size_t r() const { return c_.size(); }
    const Rational& beta() const { return beta_; }
    const std::vector<Rational>& c() const { return c_; }
    const Rational& c(std::size_t i) const { return c_[i]; }

    /// c_i / (1 - c_i)
    Rational gamma(std::size_t i) const { return c_[i] / (Rational(1) - c_[i]); }
    /// 1 / (1 - c_i)
    Rational inv_one_minus(std::size_t i) const { return Rational(1) / (Rational(1) - c_[i]); }

    /// Same c, different beta (validated).
    Params with_beta(const Rational& beta) const;
    /// Relabeled family: c'_k = c_{perm[k]}.
    Params permuted(const std::vector<std::size_t>& perm) const;

    /// Test-only hook: an offset added to the diagonal nearest-neighbour
    /// recurrence coefficient for every |n| >= 1. Used to prove that the
    /// verification pipeline detects a corrupted construction.
    Params with_recurrence_fault(const Rational& offset) const;
    const Rational& recurrence_fault() const { return fault_; }

    std::string str() const;

    friend bool operator==(const Params&, const Params&) = default;

private:
    Rational beta_;
    std::vector<Rational> c_;
    Rational fault_;
};

}  // namespace mm
