#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mm/params.hpp"
#include "mm/rational.hpp"

namespace mm {

/// Bargmann monomials z^n with |n| <= max_degree, enumerated degree-major and,
/// within a degree, with higher powers of earlier coordinates first
/// (1, z1, z2, z1^2, z1 z2, z2^2, ... for two modes).
class FockBasis {
public:
    FockBasis(std::size_t modes, int max_degree);

    std::size_t modes() const { return modes_; }
    int max_degree() const { return max_degree_; }
    std::size_t size() const { return states_.size(); }

    const MultiIndex& state(std::size_t k) const { return states_.at(k); }
    int degree(std::size_t k) const { return states_.at(k).total(); }
    /// nullopt when n lies outside the truncation.
    std::optional<std::size_t> find(const MultiIndex& n) const;
    /// Throws std::out_of_range when n lies outside the truncation.
    std::size_t index(const MultiIndex& n) const;

private:
    std::size_t modes_;
    int max_degree_;
    std::vector<MultiIndex> states_;
    std::map<MultiIndex, std::size_t> lookup_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;
BasisPtr make_basis(std::size_t modes, int max_degree);

class FockVector;

/// Sparse exact matrix on a truncated monomial basis, stored by columns.
class FockMatrix {
public:
    using Column = std::map<std::size_t, Rational>;

    explicit FockMatrix(BasisPtr basis);
    static FockMatrix identity(BasisPtr basis);

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const { return basis_; }
    std::size_t dim() const { return columns_.size(); }

    const Column& column(std::size_t col) const { return columns_.at(col); }
    Rational at(std::size_t row, std::size_t col) const;
    void add(std::size_t row, std::size_t col, const Rational& value);
    std::size_t nonzeros() const;

    FockMatrix& operator+=(const FockMatrix& o);
    FockMatrix& operator-=(const FockMatrix& o);
    FockMatrix& operator*=(const Rational& s);
    friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
    friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
    friend FockMatrix operator*(FockMatrix a, const Rational& s) { return a *= s; }
    friend FockMatrix operator*(const Rational& s, FockMatrix a) { return a *= s; }
    /// Truncated product: intermediate components beyond the basis are lost.
    friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
    friend FockVector operator*(const FockMatrix& a, const FockVector& v);
    friend bool operator==(const FockMatrix& a, const FockMatrix& b) { return a.columns_ == b.columns_; }

private:
    void require_same_basis(const FockMatrix& o) const;

    BasisPtr basis_;
    std::vector<Column> columns_;
};

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b);

/// Sparse exact vector on a truncated monomial basis.
class FockVector {
public:
    explicit FockVector(BasisPtr basis) : basis_(std::move(basis)) {}

    const FockBasis& basis() const { return *basis_; }
    const BasisPtr& basis_ptr() const { return basis_; }
    const std::map<std::size_t, Rational>& entries() const { return entries_; }
    Rational at(std::size_t k) const;
    Rational at(const MultiIndex& n) const { return at(basis_->index(n)); }
    void add(std::size_t k, const Rational& value);

    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Rational& s);
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(FockVector a, const Rational& s) { return a *= s; }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.entries_ == b.entries_; }

private:
    BasisPtr basis_;
    std::map<std::size_t, Rational> entries_;
};

/// First disagreement of two matrices over columns with degree <= N - margin
/// (all rows compared).
struct MatrixMismatch {
    std::size_t row;
    std::size_t column;
    Rational lhs;
    Rational rhs;
};
std::optional<MatrixMismatch> first_interior_mismatch(const FockMatrix& a, const FockMatrix& b, int margin);
/// Same over columns with degree > N - margin (the boundary).
std::optional<MatrixMismatch> first_boundary_mismatch(const FockMatrix& a, const FockMatrix& b, int margin);

struct VectorMismatch {
    std::size_t component;
    Rational lhs;
    Rational rhs;
};
/// First disagreement over components with degree <= N - margin.
std::optional<VectorMismatch> first_interior_mismatch(const FockVector& a, const FockVector& b, int margin);
std::optional<VectorMismatch> first_boundary_mismatch(const FockVector& a, const FockVector& b, int margin);

}  // namespace mm
