#include "mm/fock.hpp"

#include <stdexcept>

namespace mm {

FockBasis::FockBasis(std::size_t modes, int max_degree) : modes_(modes), max_degree_(max_degree)
{
    if (modes == 0) throw std::invalid_argument("Fock basis needs at least one mode");
    if (max_degree < 0) throw std::invalid_argument("Fock basis degree bound must be non-negative");
    states_ = indices_up_to(modes, max_degree);
    for (std::size_t k = 0; k < states_.size(); ++k) lookup_.emplace(states_[k], k);
}

std::optional<std::size_t> FockBasis::find(const MultiIndex& n) const
{
    auto it = lookup_.find(n);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t FockBasis::index(const MultiIndex& n) const
{
    auto it = lookup_.find(n);
    if (it == lookup_.end()) throw std::out_of_range("state (" + n.str() + ") is outside the truncated basis");
    return it->second;
}

BasisPtr make_basis(std::size_t modes, int max_degree) { return std::make_shared<const FockBasis>(modes, max_degree); }

FockMatrix::FockMatrix(BasisPtr basis) : basis_(std::move(basis)), columns_(basis_->size()) {}

FockMatrix FockMatrix::identity(BasisPtr basis)
{
    FockMatrix m(std::move(basis));
    for (std::size_t k = 0; k < m.dim(); ++k) m.columns_[k].emplace(k, Rational(1));
    return m;
}

Rational FockMatrix::at(std::size_t row, std::size_t col) const
{
    const Column& c = columns_.at(col);
    auto it = c.find(row);
    return it == c.end() ? Rational(0) : it->second;
}

void FockMatrix::add(std::size_t row, std::size_t col, const Rational& value)
{
    if (row >= dim() || col >= dim()) throw std::out_of_range("matrix entry outside the basis");
    if (value.is_zero()) return;
    Column& c = columns_[col];
    auto [it, inserted] = c.emplace(row, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) c.erase(it);
    }
}

std::size_t FockMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void FockMatrix::require_same_basis(const FockMatrix& o) const
{
    if (o.basis_->modes() != basis_->modes() || o.basis_->max_degree() != basis_->max_degree())
        throw std::invalid_argument("matrices live on different bases");
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& o)
{
    require_same_basis(o);
    for (std::size_t col = 0; col < dim(); ++col)
        for (const auto& [row, v] : o.columns_[col]) add(row, col, v);
    return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& o)
{
    require_same_basis(o);
    for (std::size_t col = 0; col < dim(); ++col)
        for (const auto& [row, v] : o.columns_[col]) add(row, col, -v);
    return *this;
}

FockMatrix& FockMatrix::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        for (auto& c : columns_) c.clear();
        return *this;
    }
    for (auto& c : columns_)
        for (auto& [row, v] : c) v *= s;
    return *this;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b)
{
    a.require_same_basis(b);
    FockMatrix out(a.basis_);
    for (std::size_t col = 0; col < b.dim(); ++col) {
        for (const auto& [mid, bv] : b.columns_[col]) {
            for (const auto& [row, av] : a.columns_[mid]) out.add(row, col, av * bv);
        }
    }
    return out;
}

FockVector operator*(const FockMatrix& a, const FockVector& v)
{
    if (v.basis().modes() != a.basis().modes() || v.basis().max_degree() != a.basis().max_degree())
        throw std::invalid_argument("vector lives on a different basis");
    FockVector out(a.basis_);
    for (const auto& [col, x] : v.entries())
        for (const auto& [row, av] : a.columns_[col]) out.add(row, av * x);
    return out;
}

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b) { return a * b - b * a; }

Rational FockVector::at(std::size_t k) const
{
    auto it = entries_.find(k);
    return it == entries_.end() ? Rational(0) : it->second;
}

void FockVector::add(std::size_t k, const Rational& value)
{
    if (k >= basis_->size()) throw std::out_of_range("vector component outside the basis");
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.emplace(k, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

FockVector& FockVector::operator-=(const FockVector& o)
{
    for (const auto& [k, v] : o.entries_) add(k, -v);
    return *this;
}

FockVector& FockVector::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_) v *= s;
    return *this;
}

namespace {

template <typename Pred>
std::optional<MatrixMismatch> first_matrix_mismatch(const FockMatrix& a, const FockMatrix& b, Pred column_selected)
{
    for (std::size_t col = 0; col < a.dim(); ++col) {
        if (!column_selected(a.basis().degree(col))) continue;
        for (std::size_t row = 0; row < a.dim(); ++row) {
            Rational x = a.at(row, col);
            Rational y = b.at(row, col);
            if (x != y) return MatrixMismatch{row, col, std::move(x), std::move(y)};
        }
    }
    return std::nullopt;
}

template <typename Pred>
std::optional<VectorMismatch> first_vector_mismatch(const FockVector& a, const FockVector& b, Pred selected)
{
    for (std::size_t k = 0; k < a.basis().size(); ++k) {
        if (!selected(a.basis().degree(k))) continue;
        Rational x = a.at(k);
        Rational y = b.at(k);
        if (x != y) return VectorMismatch{k, std::move(x), std::move(y)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<MatrixMismatch> first_interior_mismatch(const FockMatrix& a, const FockMatrix& b, int margin)
{
    const int limit = a.basis().max_degree() - margin;
    return first_matrix_mismatch(a, b, [limit](int d) { return d <= limit; });
}

std::optional<MatrixMismatch> first_boundary_mismatch(const FockMatrix& a, const FockMatrix& b, int margin)
{
    const int limit = a.basis().max_degree() - margin;
    return first_matrix_mismatch(a, b, [limit](int d) { return d > limit; });
}

std::optional<VectorMismatch> first_interior_mismatch(const FockVector& a, const FockVector& b, int margin)
{
    const int limit = a.basis().max_degree() - margin;
    return first_vector_mismatch(a, b, [limit](int d) { return d <= limit; });
}

std::optional<VectorMismatch> first_boundary_mismatch(const FockVector& a, const FockVector& b, int margin)
{
    const int limit = a.basis().max_degree() - margin;
    return first_vector_mismatch(a, b, [limit](int d) { return d > limit; });
}

}  // namespace mm
