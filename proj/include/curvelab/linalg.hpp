#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>

namespace curvelab {

// All internal arithmetic runs in extended precision. The closed-form checks
// compare quantities of order 10^6 against absolute tolerances of 10^-9, which
// is below what a double-precision pipeline can guarantee.
using Real = long double;
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using SparseMatrix = Eigen::SparseMatrix<Real>;

/// Smallest eigenvalue of a symmetric matrix.
Real min_eigenvalue(const Matrix& sym);

/// Eigenvalues of a symmetric matrix, ascending.
Vector eigenvalues(const Matrix& sym);

/// Largest absolute entry of `a - b`; matrices must agree in shape.
Real max_abs_diff(const Matrix& a, const Matrix& b);

/// Spectral norm of a symmetric matrix.
Real operator_norm(const Matrix& sym);

/// Largest |x| over ascending spectra of two symmetric matrices of equal size.
Real spectral_distance(const Matrix& a, const Matrix& b);

/// Symmetric part (A + A^T) / 2.
Matrix symmetrized(const Matrix& a);

}  // namespace curvelab
