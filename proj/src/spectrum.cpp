#include "mm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace mm {

Eigen::MatrixXd to_dense(const FockMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t col = 0; col < m.dim(); ++col) {
        for (const auto& [row, v] : m.column(col))
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v.to_double();
    }
    return out;
}

Eigen::MatrixXd to_number_basis(const FockMatrix& m)
{
    Eigen::MatrixXd out = to_dense(m);
    const FockBasis& basis = m.basis();
    Eigen::VectorXd scale(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        scale(static_cast<Eigen::Index>(k)) = std::sqrt(basis.state(k).factorial().to_double());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) *= scale(r) / scale(c);
    }
    return out;
}

std::vector<std::complex<double>> spectrum_diag(const Params& params, std::size_t i, int max_degree,
                                                HamiltonianKind kind)
{
    if (max_degree < 2) throw std::invalid_argument("degree bound N must be >= 2");
    if (i >= params.r()) throw std::invalid_argument("mode index out of range");
    const WeylOp h = kind == HamiltonianKind::plain ? ops::hamiltonian(params, i) : ops::hamiltonian_bar(params, i);
    const Eigen::MatrixXd dense = to_dense(h.to_matrix(make_basis(params.r(), max_degree)));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
    std::vector<std::complex<double>> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

}  // namespace mm
