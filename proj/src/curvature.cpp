#include "curvelab/curvature.hpp"

#include "curvelab/knalgebra.hpp"
#include "curvelab/multilinear.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace curvelab {

CurvatureOperator::CurvatureOperator(int n, const Matrix& mat) : n_(n) {
  if (n < 2) throw std::invalid_argument("CurvatureOperator: need n >= 2");
  const int pairs = pair_count(n);
  if (mat.rows() != pairs || mat.cols() != pairs)
    throw std::invalid_argument("CurvatureOperator: matrix is " + std::to_string(mat.rows()) +
                                "x" + std::to_string(mat.cols()) + ", expected " +
                                std::to_string(pairs) + "x" + std::to_string(pairs) +
                                " for n = " + std::to_string(n));
  asymmetry_ = max_abs_diff(mat, mat.transpose());
  mat_ = symmetrized(mat);
}

CurvatureOperator CurvatureOperator::zero(int n) {
  return CurvatureOperator(n, Matrix::Zero(pair_count(n), pair_count(n)));
}

Real CurvatureOperator::entry(int i, int j, int k, int l) const {
  if (i == j || k == l) return 0;
  Real sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (k > l) {
    std::swap(k, l);
    sign = -sign;
  }
  return sign * mat_(pair_index(n_, i, j), pair_index(n_, k, l));
}

CurvatureOperator& CurvatureOperator::operator+=(const CurvatureOperator& other) {
  if (other.n_ != n_) throw std::invalid_argument("CurvatureOperator: dimension mismatch");
  mat_ += other.mat_;
  return *this;
}

CurvatureOperator& CurvatureOperator::operator-=(const CurvatureOperator& other) {
  if (other.n_ != n_) throw std::invalid_argument("CurvatureOperator: dimension mismatch");
  mat_ -= other.mat_;
  return *this;
}

CurvatureOperator& CurvatureOperator::operator*=(Real s) {
  mat_ *= s;
  return *this;
}

namespace fixtures {

CurvatureOperator identity(int n) {
  return CurvatureOperator(n, Matrix::Identity(pair_count(n), pair_count(n)));
}

CurvatureOperator wedge4_element(int n, int i, int j, int k, int l) {
  if (!(0 <= i && i < j && j < k && k < l && l < n))
    throw std::invalid_argument("wedge4_element: need 0 <= i < j < k < l < n");
  Matrix m = Matrix::Zero(pair_count(n), pair_count(n));
  const auto put = [&](int a, int b, int c, int d, Real v) {
    m(pair_index(n, a, b), pair_index(n, c, d)) = v;
    m(pair_index(n, c, d), pair_index(n, a, b)) = v;
  };
  put(i, j, k, l, 1);
  put(i, k, j, l, -1);
  put(i, l, j, k, 1);
  return CurvatureOperator(n, m);
}

CurvatureOperator hodge_star() { return wedge4_element(4, 0, 1, 2, 3); }

CurvatureOperator s2xs2() {
  Matrix m = Matrix::Zero(6, 6);
  m(pair_index(4, 0, 1), pair_index(4, 0, 1)) = 1;
  m(pair_index(4, 2, 3), pair_index(4, 2, 3)) = 1;
  return CurvatureOperator(4, m);
}

CurvatureOperator r_u(int n) { return identity(n); }

CurvatureOperator r_l(int n) {
  if (n < 2) throw std::invalid_argument("r_l: need n >= 2");
  Matrix h = Matrix::Zero(n, n);
  h(0, 0) = 1;
  h(n - 1, n - 1) = -1;
  return kn_forms(h, Matrix::Identity(n, n));
}

CurvatureOperator r_w(int n) {
  if (n < 4) throw std::invalid_argument("r_w: need n >= 4");
  const int N = pair_count(n);
  Vector a = Vector::Zero(N);
  Vector b = Vector::Zero(N);
  a(pair_index(n, 0, 1)) = 1;
  a(pair_index(n, 2, 3)) = 1;
  b(pair_index(n, 0, 2)) = 1;
  b(pair_index(n, 1, 3)) = -1;
  return CurvatureOperator(n, a * a.transpose() - b * b.transpose());
}

CurvatureOperator r_w4(int n) {
  if (n < 4) throw std::invalid_argument("r_w4: need n >= 4");
  return wedge4_element(n, 0, 1, 2, 3);
}

bool is_fixture_name(const std::string& name) {
  static const std::array<const char*, 7> names = {"identity", "hodge-star", "s2xs2", "RU",
                                                   "RL",       "RW",         "RW4"};
  for (const char* s : names)
    if (name == s) return true;
  return false;
}

CurvatureOperator by_name(const std::string& name, int n) {
  if (name == "identity") return identity(n);
  if (name == "RU") return r_u(n);
  if (name == "RL") return r_l(n);
  if (name == "RW") return r_w(n);
  if (name == "RW4") return r_w4(n);
  if (name == "hodge-star" || name == "s2xs2") {
    if (n != 4) throw std::invalid_argument("fixture '" + name + "' exists only for n = 4");
    return name == "s2xs2" ? s2xs2() : hodge_star();
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

CurvatureOperator random(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int N = pair_count(n);
  Matrix m(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) m(a, b) = m(b, a) = dist(rng);
  return CurvatureOperator(n, m);
}

}  // namespace fixtures

Matrix ricci(const CurvatureOperator& r) {
  const int n = r.n();
  Matrix ric = Matrix::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int i = 0; i < n; ++i) ric(p, q) += r.entry(p, i, q, i);
  return ric;
}

Real scalar_curvature(const CurvatureOperator& r) { return ricci(r).trace(); }

Real frobenius(const CurvatureOperator& a, const CurvatureOperator& b) {
  if (a.n() != b.n()) throw std::invalid_argument("frobenius: dimension mismatch");
  return (a.matrix().array() * b.matrix().array()).sum();
}

CurvatureOperator kn_forms(const Matrix& h, const Matrix& k) {
  if (h.rows() != k.rows()) throw std::invalid_argument("kn_forms: dimension mismatch");
  const KNElement product = kn_wedge(kn_form(KNAlgebra::Exterior, h), kn_form(KNAlgebra::Exterior, k));
  return CurvatureOperator(static_cast<int>(h.rows()), product.mat);
}

CurvatureOperator wedge4_projection(const CurvatureOperator& r) {
  const int n = r.n();
  CurvatureOperator out = CurvatureOperator::zero(n);
  // The elements wedge4_element(i,j,k,l) have disjoint supports and squared
  // norm 6, so the projection is a sum of independent one-dimensional ones.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const CurvatureOperator w = fixtures::wedge4_element(n, i, j, k, l);
          const Real c = frobenius(r, w) / 6;
          if (c != 0) out += c * w;
        }
  return out;
}

CurvatureDecomposition decompose(const CurvatureOperator& r) {
  const int n = r.n();
  if (n < 3) throw std::invalid_argument("decompose: need n >= 3");
  const Matrix g = Matrix::Identity(n, n);
  const Matrix ric = ricci(r);
  const Real scal = ric.trace();
  const Matrix ric0 = ric - (scal / n) * g;

  CurvatureOperator r_u = (scal / (2 * n * (n - 1))) * kn_forms(g, g);
  CurvatureOperator r_l = (Real(1) / (n - 2)) * kn_forms(g, ric0);
  if (n == 3) {
    return {r_u, r_l, CurvatureOperator::zero(n), CurvatureOperator::zero(n), scal, ric, ric0, true};
  }
  CurvatureOperator r_w4 = wedge4_projection(r);
  CurvatureOperator r_w = r - r_u - r_l - r_w4;
  return {r_u, r_l, r_w, r_w4, scal, ric, ric0, false};
}

Real CurvatureDecomposition::reconstruction_residual(const CurvatureOperator& original) const {
  return max_abs_diff((r_u + r_l + r_w + r_w4).matrix(), original.matrix());
}

Real CurvatureDecomposition::orthogonality_residual() const {
  const std::array<const CurvatureOperator*, 4> parts = {&r_u, &r_l, &r_w, &r_w4};
  Real worst = 0;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      worst = std::max(worst, std::abs(frobenius(*parts[a], *parts[b])));
  return worst;
}

TwoPlane TwoPlane::make(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("TwoPlane: vectors differ in length");
  const Real tol = 1e-12;
  if (std::abs(x.norm() - 1) > tol || std::abs(y.norm() - 1) > tol || std::abs(x.dot(y)) > tol)
    throw std::invalid_argument("TwoPlane: vectors are not orthonormal");
  return {x, y};
}

TwoPlane TwoPlane::orthonormalized(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("TwoPlane: vectors differ in length");
  const Real nx = x.norm();
  if (nx == 0) throw std::invalid_argument("TwoPlane: zero vector");
  Vector u = x / nx;
  Vector v = y - u.dot(y) * u;
  v -= u.dot(v) * u;
  const Real nv = v.norm();
  if (nv <= Real(1e-14) * std::max(Real(1), y.norm()))
    throw std::invalid_argument("TwoPlane: vectors are linearly dependent");
  return {u, v / nv};
}

TwoPlane TwoPlane::coordinate(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("TwoPlane: coordinate indices coincide");
  return {Vector::Unit(n, i), Vector::Unit(n, j)};
}

Vector TwoPlane::bivector() const {
  const int dim = n();
  Vector b(pair_count(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) b(pair_index(dim, i, j)) = x(i) * y(j) - x(j) * y(i);
  return b;
}

Real sec(const CurvatureOperator& r, const TwoPlane& sigma) {
  if (sigma.n() != r.n()) throw std::invalid_argument("sec: plane lives in the wrong dimension");
  const Vector b = sigma.bivector();
  return b.dot(r.matrix() * b);
}

CurvatureOperator transform(const CurvatureOperator& r, const Matrix& q) {
  if (q.rows() != r.n() || q.cols() != r.n())
    throw std::invalid_argument("transform: Q has the wrong size");
  const Matrix rho = exterior_power_matrix(q, 2);
  return CurvatureOperator(r.n(), rho * r.matrix() * rho.transpose());
}

Matrix random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (rr(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace curvelab
