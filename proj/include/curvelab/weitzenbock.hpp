#pragma once

// The curvature term K(R,ρ) = −Σ_{a,b} R_ab dρ(X_a) dρ(X_b), summed over the
// orthonormal pair basis X_a = E_ij of so(n).

#include "curvelab/curvature.hpp"
#include "curvelab/linalg.hpp"
#include "curvelab/multilinear.hpp"

#include <vector>

namespace curvelab {

struct SymmetricEndomorphism {
  RepSpacePtr space;
  Matrix mat;
  /// max |K − Kᵀ| before the final symmetrization.
  Real symmetry_defect{0};

  int dim() const { return static_cast<int>(mat.rows()); }
};

/// K(R, V). Throws std::invalid_argument when V.n() != R.n(), and
/// std::logic_error when the assembled matrix is asymmetric beyond 1e-10
/// relative to its size.
SymmetricEndomorphism curvature_term(const CurvatureOperator& r, const RepSpacePtr& space);

/// <Kφ, φ> for φ in the orthonormal coordinates of K's space.
Real quadratic_form(const SymmetricEndomorphism& k, const Vector& phi);
/// <Kφ, ψ>.
Real bilinear_form(const SymmetricEndomorphism& k, const Vector& phi, const Vector& psi);

/// ρ(Q) on V for an orthogonal matrix Q.
Matrix representation_matrix(const RepSpace& space, const Matrix& q);

struct HarmonicBlock {
  int k{0};                      // degree of the harmonic factor r^{p-k} Sym^k_0
  SymmetricEndomorphism block;   // restriction of K(R, Sym^p) to that factor
  Real spectral_residual{0};     // spectral distance to K(R, Sym^k_0) built directly
};

struct BlockStructure {
  std::vector<HarmonicBlock> blocks;  // k = p, p-2, ...
  Real off_block_residual{0};
  Real max_spectral_residual{0};
};

/// K(R, Sym^p) in the basis adapted to Sym^p = ⊕ r^{p-k} Sym^k_0. Throws
/// std::logic_error when an off-diagonal block exceeds 1e-9 or a block's
/// spectrum differs from the direct construction by more than 1e-8 (both
/// relative to max(1, |R|)).
BlockStructure block_structure(const CurvatureOperator& r, int p);

struct BergerPair {
  Real eigenvalue{0};  // λ_m of Ric
  Real form_value{0};  // <K(R,Sym²_0)φ_m, φ_m>, φ_m = v_m∨v_m − g/n
};

/// Pairs (λ_m, <K(R,Sym²_0)φ_m,φ_m>) over an eigenbasis of Ric; throws
/// std::logic_error when some form value differs from 4λ_m by more than 1e-8
/// relative to max(1, |R|).
std::vector<BergerPair> berger_diagonal(const CurvatureOperator& r);

/// v∨v − |v|² g/n as a harmonic polynomial.
Polynomial traceless_square(const Vector& v);

}  // namespace curvelab
