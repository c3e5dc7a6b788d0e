#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mm/fock_checks.hpp"

namespace mm {

/// Dense floating copy of an exact matrix.
Eigen::MatrixXd to_dense(const FockMatrix& m);

/// S A S^{-1} with S = diag(sqrt(n!)): the matrix in the normalized number basis.
Eigen::MatrixXd to_number_basis(const FockMatrix& m);

/// Eigenvalues of the truncated H_i (or Hbar_i), sorted by real part then by
/// imaginary part. Truncation perturbs the spectrum; this is a diagnostic only.
std::vector<std::complex<double>> spectrum_diag(const Params& params, std::size_t i, int max_degree,
                                                HamiltonianKind kind = HamiltonianKind::plain);

}  // namespace mm
