#include "curvelab/knalgebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvelab {

const char* to_string(KNAlgebra algebra) {
  switch (algebra) {
    case KNAlgebra::Exterior: return "exterior";
    case KNAlgebra::SymmetricFull: return "symmetric";
    case KNAlgebra::SymmetricTraceless: return "traceless";
  }
  return "?";
}

RepKind rep_kind(KNAlgebra algebra) {
  switch (algebra) {
    case KNAlgebra::Exterior: return RepKind::Exterior;
    case KNAlgebra::SymmetricFull: return RepKind::Symmetric;
    case KNAlgebra::SymmetricTraceless: return RepKind::TracelessSymmetric;
  }
  throw std::invalid_argument("rep_kind: unknown algebra");
}

namespace {

void check_grade(KNAlgebra algebra, int n, int p) {
  if (p < 0) throw std::invalid_argument("KN algebra: negative grade");
  if (algebra == KNAlgebra::Exterior && p > n)
    throw std::out_of_range("KN algebra: exterior grade " + std::to_string(p) +
                            " exceeds n = " + std::to_string(n));
  if (algebra != KNAlgebra::Exterior && p > kMaxSymmetricGrade)
    throw std::out_of_range("KN algebra: symmetric grade " + std::to_string(p) +
                            " exceeds the supported maximum " +
                            std::to_string(kMaxSymmetricGrade));
}

struct Dyad {
  Real weight;
  Vector v;
};

// Eigen-dyad expansion of a symmetric matrix. Diagonal matrices expand over
// the coordinate vectors directly, which keeps products with g-powers sparse.
std::vector<Dyad> dyads(const Matrix& a) {
  std::vector<Dyad> out;
  const int dim = static_cast<int>(a.rows());
  const Matrix off = a - Matrix(a.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() == 0 || dim == 1) {
    for (int i = 0; i < dim; ++i) {
      if (a(i, i) == 0) continue;
      out.push_back({a(i, i), Vector::Unit(dim, i)});
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("KN product: eigensolver failed");
  const Real scale = solver.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < dim; ++i) {
    const Real lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) <= scale * Real(1e-18)) continue;
    out.push_back({lambda, solver.eigenvectors().col(i)});
  }
  return out;
}

template <class Product>
Matrix dyad_product(const Matrix& a, const Matrix& b, int target_dim, Product product) {
  Matrix out = Matrix::Zero(target_dim, target_dim);
  const auto da = dyads(a);
  const auto db = dyads(b);
  for (const auto& x : da) {
    for (const auto& y : db) {
      const Vector w = product(x.v, y.v);
      out.noalias() += (x.weight * y.weight) * (w * w.transpose());
    }
  }
  return symmetrized(out);
}

}  // namespace

KNElement kn_element(KNAlgebra algebra, int n, int p, const Matrix& mat) {
  check_grade(algebra, n, p);
  auto space = cached_space(rep_kind(algebra), n, p);
  if (mat.rows() != space->dim() || mat.cols() != space->dim())
    throw std::invalid_argument("kn_element: matrix is " + std::to_string(mat.rows()) + "x" +
                                std::to_string(mat.cols()) + ", expected dimension " +
                                std::to_string(space->dim()));
  return {algebra, std::move(space), symmetrized(mat)};
}

KNElement kn_unit(KNAlgebra algebra, int n) {
  return kn_element(algebra, n, 0, Matrix::Identity(1, 1));
}

KNElement kn_metric(KNAlgebra algebra, int n) {
  return kn_element(algebra, n, 1, Matrix::Identity(n, n));
}

KNElement kn_form(KNAlgebra algebra, const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("kn_form: matrix is not square");
  return kn_element(algebra, static_cast<int>(h.rows()), 1, h);
}

Vector wedge_vectors(const RepSpace& a, const Vector& va, const RepSpace& b, const Vector& vb,
                     const RepSpace& target) {
  Vector out = Vector::Zero(target.dim());
  std::vector<int> idx;
  for (int i = 0; i < a.dim(); ++i) {
    if (va(i) == 0) continue;
    for (int j = 0; j < b.dim(); ++j) {
      if (vb(j) == 0) continue;
      idx = a.wedge_labels()[i].indices;
      const auto& tail = b.wedge_labels()[j].indices;
      idx.insert(idx.end(), tail.begin(), tail.end());
      const int sign = sort_with_sign(idx);
      if (sign == 0) continue;
      out(target.index_of(WedgeIndex{idx})) += sign * va(i) * vb(j);
    }
  }
  return out;
}

Vector vee_vectors(const RepSpace& a, const Vector& va, const RepSpace& b, const Vector& vb,
                   const RepSpace& target) {
  // u_l u_m = sqrt((l+m)! / (l! m!)) u_{l+m}
  Vector out = Vector::Zero(target.ambient_dim());
  for (int i = 0; i < va.size(); ++i) {
    if (va(i) == 0) continue;
    const MultiIndex& l = a.monomial_labels()[i];
    for (int j = 0; j < vb.size(); ++j) {
      if (vb(j) == 0) continue;
      const MultiIndex& m = b.monomial_labels()[j];
      MultiIndex s = l;
      for (int k = 0; k < s.size(); ++k) s.exponents[k] += m.exponents[k];
      const Real ratio = static_cast<Real>(s.factorial()) /
                         (static_cast<Real>(l.factorial()) * static_cast<Real>(m.factorial()));
      out(target.index_of(s)) += std::sqrt(ratio) * va(i) * vb(j);
    }
  }
  return out;
}

KNElement kn_wedge(const KNElement& a, const KNElement& b) {
  if (a.algebra != KNAlgebra::Exterior || b.algebra != KNAlgebra::Exterior)
    throw std::invalid_argument("kn_wedge: both factors must lie in the exterior algebra");
  if (a.n() != b.n()) throw std::invalid_argument("kn_wedge: dimension mismatch");
  const int n = a.n();
  const int p = a.grade() + b.grade();
  check_grade(KNAlgebra::Exterior, n, p);
  auto target = cached_space(RepKind::Exterior, n, p);
  Matrix mat = dyad_product(a.mat, b.mat, target->dim(), [&](const Vector& x, const Vector& y) {
    return wedge_vectors(*a.space, x, *b.space, y, *target);
  });
  return {KNAlgebra::Exterior, target, std::move(mat)};
}

KNElement kn_vee(const KNElement& a, const KNElement& b) {
  if (a.algebra == KNAlgebra::Exterior || a.algebra != b.algebra)
    throw std::invalid_argument(
        "kn_vee: both factors must lie in the same symmetric algebra (full or traceless)");
  if (a.n() != b.n()) throw std::invalid_argument("kn_vee: dimension mismatch");
  const int n = a.n();
  const int p = a.grade() + b.grade();
  check_grade(a.algebra, n, p);
  const bool traceless = a.algebra == KNAlgebra::SymmetricTraceless;
  auto target = cached_space(rep_kind(a.algebra), n, p);
  const Matrix& ha = a.space->harmonic_basis();
  const Matrix& hb = b.space->harmonic_basis();
  const Matrix& ht = target->harmonic_basis();
  Matrix mat = dyad_product(a.mat, b.mat, target->dim(), [&](const Vector& x, const Vector& y) {
    if (!traceless) return vee_vectors(*a.space, x, *b.space, y, *target);
    // embed harmonic coordinates, multiply, then project onto the harmonics
    const Vector prod = vee_vectors(*a.space, ha * x, *b.space, hb * y, *target);
    return Vector(ht.transpose() * prod);
  });
  return {a.algebra, target, std::move(mat)};
}

KNElement kn_product(const KNElement& a, const KNElement& b) {
  return a.algebra == KNAlgebra::Exterior ? kn_wedge(a, b) : kn_vee(a, b);
}

KNElement pi_project(const KNElement& a) {
  if (a.algebra == KNAlgebra::Exterior)
    throw std::invalid_argument("pi_project: exterior elements have no harmonic projection");
  if (a.algebra == KNAlgebra::SymmetricTraceless) return a;
  auto target = cached_space(RepKind::TracelessSymmetric, a.n(), a.grade());
  const Matrix& h = target->harmonic_basis();
  return {KNAlgebra::SymmetricTraceless, target, symmetrized(h.transpose() * a.mat * h)};
}

Matrix vee_dyad(const Polynomial& alpha, const Polynomial& beta, const Polynomial& gamma,
                const Polynomial& delta) {
  const Polynomial left = alpha * gamma;
  const Polynomial right = beta * delta;
  if (left.is_zero() || right.is_zero()) throw std::invalid_argument("vee_dyad: zero factor");
  const int n = alpha.n();
  auto sl = cached_space(RepKind::Symmetric, n, left.degree());
  auto sr = cached_space(RepKind::Symmetric, n, right.degree());
  if (sl->dim() != sr->dim()) throw std::invalid_argument("vee_dyad: slot degrees differ");
  return sl->coordinates(left) * sr->coordinates(right).transpose();
}

KNElement iterated_g_power(KNAlgebra algebra, int n, int p) {
  check_grade(algebra, n, p);
  KNElement out = kn_unit(algebra, n);
  const KNElement g = kn_metric(algebra, n);
  for (int i = 0; i < p; ++i) out = kn_product(out, g);
  return out;
}

KNElement g_power(KNAlgebra algebra, int n, int p) {
  check_grade(algebra, n, p);
  auto space = cached_space(rep_kind(algebra), n, p);
  KNElement closed{algebra, space,
                   static_cast<Real>(factorial(p)) * Matrix::Identity(space->dim(), space->dim())};
  if (p <= 4) {
    const Real residual = max_abs_diff(iterated_g_power(algebra, n, p).mat, closed.mat);
    if (residual > Real(1e-10))
      throw std::logic_error("g_power: iterated product differs from p!·Id by " +
                             std::to_string(static_cast<double>(residual)));
  }
  return closed;
}

}  // namespace curvelab
