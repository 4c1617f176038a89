#include "curvelab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvelab {

Vector eigenvalues(const Matrix& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("eigenvalues: matrix is not square");
  if (sym.rows() == 0) return Vector(0);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalues: solver did not converge");
  return solver.eigenvalues();
}

Real min_eigenvalue(const Matrix& sym) {
  if (sym.rows() == 0) throw std::invalid_argument("min_eigenvalue: empty matrix");
  return eigenvalues(sym)(0);
}

Real max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0;
  return (a - b).cwiseAbs().maxCoeff();
}

Real operator_norm(const Matrix& sym) {
  if (sym.size() == 0) return 0;
  Vector ev = eigenvalues(sym);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

Real spectral_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("spectral_distance: size mismatch");
  if (a.size() == 0) return 0;
  return (eigenvalues(a) - eigenvalues(b)).cwiseAbs().maxCoeff();
}

Matrix symmetrized(const Matrix& a) {
  Matrix s = (a + a.transpose()) / Real(2);
  return s;
}

}  // namespace curvelab
