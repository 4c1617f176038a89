#pragma once

// Algebraic (modified) curvature operators: symmetric bilinear forms on
// Λ²R^n in the lexicographic pair basis, with the convention
// sec(X∧Y) = R(X∧Y, X∧Y).

#include "curvelab/linalg.hpp"

#include <random>
#include <string>

namespace curvelab {

class CurvatureOperator {
 public:
  /// Symmetrizes `mat`; the pre-symmetrization defect is kept in asymmetry().
  CurvatureOperator(int n, const Matrix& mat);
  static CurvatureOperator zero(int n);

  int n() const { return n_; }
  int pairs() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }
  /// max |M - Mᵀ| of the matrix supplied at construction.
  Real asymmetry() const { return asymmetry_; }

  /// R_ijkl = <R(e_i∧e_j), e_k∧e_l>, 0-based, extended antisymmetrically in
  /// each pair (zero when i == j or k == l).
  Real entry(int i, int j, int k, int l) const;
  /// R_ab in the pair basis.
  Real operator()(int a, int b) const { return mat_(a, b); }

  CurvatureOperator& operator+=(const CurvatureOperator& other);
  CurvatureOperator& operator-=(const CurvatureOperator& other);
  CurvatureOperator& operator*=(Real s);
  friend CurvatureOperator operator+(CurvatureOperator a, const CurvatureOperator& b) { return a += b; }
  friend CurvatureOperator operator-(CurvatureOperator a, const CurvatureOperator& b) { return a -= b; }
  friend CurvatureOperator operator*(CurvatureOperator a, Real s) { return a *= s; }
  friend CurvatureOperator operator*(Real s, CurvatureOperator a) { return a *= s; }

 private:
  int n_;
  Matrix mat_;
  Real asymmetry_{0};
};

namespace fixtures {

/// Id = ½ g⊘g, constant curvature 1.
CurvatureOperator identity(int n);
/// The element E_ij⊗E_kl + E_kl⊗E_ij − E_ik⊗E_jl − E_jl⊗E_ik + E_il⊗E_jk +
/// E_jk⊗E_il for 0-based i < j < k < l.
CurvatureOperator wedge4_element(int n, int i, int j, int k, int l);
/// Hodge star on Λ²R^4.
CurvatureOperator hodge_star();
/// Product of two unit 2-spheres: R(e_1∧e_2) = e_1∧e_2, R(e_3∧e_4) = e_3∧e_4.
CurvatureOperator s2xs2();
/// Test elements, one per irreducible component (n >= 4):
/// R_U = Id, R_L = diag(1,0,...,0,-1)⊘g,
/// R_W = (E_12+E_34)⊗(E_12+E_34) − (E_13−E_24)⊗(E_13−E_24),
/// R_∧4 = wedge4_element on the first four coordinates.
CurvatureOperator r_u(int n);
CurvatureOperator r_l(int n);
CurvatureOperator r_w(int n);
CurvatureOperator r_w4(int n);

/// Fixture by name: identity, hodge-star, s2xs2, RU, RL, RW, RW4.
CurvatureOperator by_name(const std::string& name, int n);
bool is_fixture_name(const std::string& name);

/// Symmetric matrix with independent entries uniform in [-1, 1] on and above
/// the diagonal.
CurvatureOperator random(int n, std::mt19937_64& rng);

}  // namespace fixtures

/// Ric_pq = Σ_i R_piqi.
Matrix ricci(const CurvatureOperator& r);
Real scalar_curvature(const CurvatureOperator& r);

/// Frobenius pairing Σ R_ab S_ab in the pair basis.
Real frobenius(const CurvatureOperator& a, const CurvatureOperator& b);

/// h⊘k for symmetric bilinear forms on R^n, as an operator on Λ²R^n.
CurvatureOperator kn_forms(const Matrix& h, const Matrix& k);

/// Orthogonal projection onto the embedded Λ^4R^n.
CurvatureOperator wedge4_projection(const CurvatureOperator& r);

struct CurvatureDecomposition {
  CurvatureOperator r_u;
  CurvatureOperator r_l;
  CurvatureOperator r_w;
  CurvatureOperator r_w4;
  Real scal{0};
  Matrix ric;
  Matrix ric0;
  /// n = 3: no Weyl and no Λ^4 component; r_w and r_w4 are zero.
  bool reduced{false};

  /// max |R − Σ parts|.
  Real reconstruction_residual(const CurvatureOperator& original) const;
  /// Largest |<part_i, part_j>| over distinct parts.
  Real orthogonality_residual() const;
};

/// R = R_U + R_L + R_W + R_∧4 with R_U = scal/(2n(n−1)) g⊘g and
/// R_L = 1/(n−2) g⊘(Ric − scal/n g). Requires n >= 3.
CurvatureDecomposition decompose(const CurvatureOperator& r);

/// Orthonormal pair (x, y) spanning a 2-plane.
struct TwoPlane {
  Vector x;
  Vector y;

  /// Validates |x| = |y| = 1 and <x,y> = 0 to 1e-12.
  static TwoPlane make(const Vector& x, const Vector& y);
  /// Gram–Schmidt on two independent vectors.
  static TwoPlane orthonormalized(const Vector& x, const Vector& y);
  static TwoPlane coordinate(int n, int i, int j);

  int n() const { return static_cast<int>(x.size()); }
  /// x∧y in the pair basis.
  Vector bivector() const;
};

Real sec(const CurvatureOperator& r, const TwoPlane& sigma);

/// Q·R = ρ(Q) R ρ(Q)ᵀ with ρ(Q) = Λ²Q.
CurvatureOperator transform(const CurvatureOperator& r, const Matrix& q);

/// Random orthogonal matrix (QR of a Gaussian matrix, sign-fixed).
Matrix random_orthogonal(int n, std::mt19937_64& rng);

}  // namespace curvelab
