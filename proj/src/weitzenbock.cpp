#include "curvelab/weitzenbock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace curvelab {

namespace {

Real operator_scale(const CurvatureOperator& r) {
  return std::max(Real(1), r.matrix().cwiseAbs().maxCoeff());
}

// −Σ_b (Σ_a R_ab D_a) D_b with sparse generators.
Matrix assemble(const CurvatureOperator& r, const std::vector<SparseMatrix>& gens, int dim) {
  Matrix k = Matrix::Zero(dim, dim);
  const int pairs = r.pairs();
  for (int b = 0; b < pairs; ++b) {
    if (gens[b].nonZeros() == 0) continue;
    SparseMatrix s(dim, dim);
    bool any = false;
    for (int a = 0; a < pairs; ++a) {
      const Real rab = r(a, b);
      if (rab == 0 || gens[a].nonZeros() == 0) continue;
      s += rab * gens[a];
      any = true;
    }
    if (!any) continue;
    const SparseMatrix prod = s * gens[b];
    for (int col = 0; col < prod.outerSize(); ++col)
      for (SparseMatrix::InnerIterator it(prod, col); it; ++it) k(it.row(), col) -= it.value();
  }
  return k;
}

}  // namespace

SymmetricEndomorphism curvature_term(const CurvatureOperator& r, const RepSpacePtr& space) {
  if (!space) throw std::invalid_argument("curvature_term: null space");
  if (space->n() != r.n())
    throw std::invalid_argument("curvature_term: operator has n = " + std::to_string(r.n()) +
                                " but the representation has n = " + std::to_string(space->n()));
  Matrix k;
  if (space->kind() == RepKind::TracelessSymmetric && space->p() >= 2) {
    // The generators preserve the harmonic subspace, so K on Sym^p_0 is the
    // compression of K on Sym^p, where the generators are much sparser.
    const auto ambient = cached_space(RepKind::Symmetric, space->n(), space->p());
    const Matrix full = assemble(r, ambient->generators(), ambient->dim());
    const Matrix& h = space->harmonic_basis();
    k = h.transpose() * full * h;
  } else {
    k = assemble(r, space->generators(), space->dim());
  }
  const Real defect = k.size() ? max_abs_diff(k, k.transpose()) : 0;
  const Real scale = k.size() ? std::max(Real(1), k.cwiseAbs().maxCoeff()) : 1;
  if (defect > Real(1e-10) * scale)
    throw std::logic_error("curvature_term: assembled matrix is asymmetric by " +
                           std::to_string(static_cast<double>(defect)));
  return {space, symmetrized(k), defect};
}

Real quadratic_form(const SymmetricEndomorphism& k, const Vector& phi) {
  return bilinear_form(k, phi, phi);
}

Real bilinear_form(const SymmetricEndomorphism& k, const Vector& phi, const Vector& psi) {
  if (phi.size() != k.dim() || psi.size() != k.dim())
    throw std::invalid_argument("bilinear_form: vector length " + std::to_string(phi.size()) +
                                " does not match dimension " + std::to_string(k.dim()));
  return psi.dot(k.mat * phi);
}

Matrix representation_matrix(const RepSpace& space, const Matrix& q) {
  if (q.rows() != space.n() || q.cols() != space.n())
    throw std::invalid_argument("representation_matrix: Q has the wrong size");
  switch (space.kind()) {
    case RepKind::Exterior: return exterior_power_matrix(q, space.p());
    case RepKind::Symmetric: return symmetric_power_matrix(q, space.p());
    case RepKind::TracelessSymmetric: {
      const Matrix& h = space.harmonic_basis();
      return h.transpose() * symmetric_power_matrix(q, space.p()) * h;
    }
  }
  throw std::invalid_argument("representation_matrix: unknown kind");
}

BlockStructure block_structure(const CurvatureOperator& r, int p) {
  if (p < 0) throw std::invalid_argument("block_structure: need p >= 0");
  const int n = r.n();
  const auto full_space = cached_space(RepKind::Symmetric, n, p);
  const SymmetricEndomorphism full = curvature_term(r, full_space);

  std::vector<int> degrees;
  std::vector<Matrix> bases;
  int total = 0;
  for (int k = p; k >= 0; k -= 2) {
    const auto harmonic = cached_space(RepKind::TracelessSymmetric, n, k);
    Matrix b = r_power_multiplication(n, k, (p - k) / 2) * harmonic->harmonic_basis();
    // multiplication by r^{p-k} is equivariant, hence a multiple of an
    // isometry on each irreducible factor
    for (int c = 0; c < b.cols(); ++c) b.col(c).normalize();
    degrees.push_back(k);
    total += static_cast<int>(b.cols());
    bases.push_back(std::move(b));
  }
  if (total != full_space->dim()) throw std::logic_error("block_structure: tower dimension mismatch");

  Matrix t(full_space->dim(), total);
  int offset = 0;
  for (const auto& b : bases) {
    t.middleCols(offset, b.cols()) = b;
    offset += static_cast<int>(b.cols());
  }
  const Matrix conj = t.transpose() * full.mat * t;

  BlockStructure out;
  Matrix off = conj;
  offset = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const int size = static_cast<int>(bases[i].cols());
    const auto space = cached_space(RepKind::TracelessSymmetric, n, degrees[i]);
    HarmonicBlock block;
    block.k = degrees[i];
    block.block = {space, symmetrized(conj.block(offset, offset, size, size)), 0};
    const SymmetricEndomorphism direct = curvature_term(r, space);
    block.spectral_residual = spectral_distance(block.block.mat, direct.mat);
    out.max_spectral_residual = std::max(out.max_spectral_residual, block.spectral_residual);
    off.block(offset, offset, size, size).setZero();
    out.blocks.push_back(std::move(block));
    offset += size;
  }
  out.off_block_residual = off.size() ? off.cwiseAbs().maxCoeff() : 0;

  const Real scale = operator_scale(r);
  if (out.off_block_residual > Real(1e-9) * scale)
    throw std::logic_error("block_structure: off-diagonal block of size " +
                           std::to_string(static_cast<double>(out.off_block_residual)));
  if (out.max_spectral_residual > Real(1e-8) * scale)
    throw std::logic_error("block_structure: block spectrum differs from direct construction by " +
                           std::to_string(static_cast<double>(out.max_spectral_residual)));
  return out;
}

Polynomial traceless_square(const Vector& v) {
  const int n = static_cast<int>(v.size());
  Polynomial out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out += (v(i) * v(j)) * (Polynomial::variable(n, i) * Polynomial::variable(n, j));
  out -= (v.squaredNorm() / n) * Polynomial::r_squared(n);
  return out;
}

std::vector<BergerPair> berger_diagonal(const CurvatureOperator& r) {
  const int n = r.n();
  const auto space = cached_space(RepKind::TracelessSymmetric, n, 2);
  const SymmetricEndomorphism k = curvature_term(r, space);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(ricci(r));
  if (solver.info() != Eigen::Success) throw std::runtime_error("berger_diagonal: eigensolver failed");
  std::vector<BergerPair> out;
  const Real tol = Real(1e-8) * operator_scale(r);
  for (int m = 0; m < n; ++m) {
    const Vector phi = space->coordinates(traceless_square(solver.eigenvectors().col(m)));
    BergerPair pair{solver.eigenvalues()(m), quadratic_form(k, phi)};
    if (std::abs(pair.form_value - 4 * pair.eigenvalue) > tol)
      throw std::logic_error("berger_diagonal: form value " +
                             std::to_string(static_cast<double>(pair.form_value)) +
                             " differs from 4λ = " +
                             std::to_string(static_cast<double>(4 * pair.eigenvalue)));
    out.push_back(pair);
  }
  return out;
}

}  // namespace curvelab
