#pragma once

// Kulkarni–Nomizu products. Elements are symmetric matrices on a graded
// piece Λ^p, Sym^p or Sym^p_0 of R^n; products are computed on eigen-dyads
// a = Σ λ w⊗w, b = Σ μ u⊗u as Σ λμ (w·u)⊗(w·u), where · is the wedge
// product, the polynomial product, or the polynomial product followed by
// harmonic projection.

#include "curvelab/linalg.hpp"
#include "curvelab/multilinear.hpp"

#include <vector>

namespace curvelab {

enum class KNAlgebra { Exterior, SymmetricFull, SymmetricTraceless };

const char* to_string(KNAlgebra algebra);
RepKind rep_kind(KNAlgebra algebra);

/// Largest grade materialized in the symmetric algebras.
inline constexpr int kMaxSymmetricGrade = 12;

struct KNElement {
  KNAlgebra algebra{KNAlgebra::Exterior};
  RepSpacePtr space;
  Matrix mat;

  int n() const { return space->n(); }
  int grade() const { return space->p(); }
};

/// Wraps a symmetric matrix as an element of the given algebra. The matrix is
/// symmetrized; its size must equal the dimension of the grade-p piece.
KNElement kn_element(KNAlgebra algebra, int n, int p, const Matrix& mat);

/// The unit (grade 0, value 1).
KNElement kn_unit(KNAlgebra algebra, int n);
/// The metric g as a grade-1 element (identity on R^n).
KNElement kn_metric(KNAlgebra algebra, int n);
/// A symmetric bilinear form h on R^n as a grade-1 element.
KNElement kn_form(KNAlgebra algebra, const Matrix& h);

/// (α⊗β) ⊘ (γ⊗δ) = (α∧γ)⊗(β∧δ), extended bilinearly.
KNElement kn_wedge(const KNElement& a, const KNElement& b);
/// (α⊗β) ⊚ (γ⊗δ) = (α∨γ)⊗(β∨δ); in the traceless algebra the product is
/// followed by π.
KNElement kn_vee(const KNElement& a, const KNElement& b);
/// kn_wedge for exterior elements, kn_vee otherwise.
KNElement kn_product(const KNElement& a, const KNElement& b);

/// π: restriction of a symmetric-algebra element to the harmonic subspace,
/// π(φ⊗ψ) = φ0⊗ψ0.
KNElement pi_project(const KNElement& a);

/// Wedge product of coordinate vectors of Λ^p and Λ^q, in Λ^{p+q}.
Vector wedge_vectors(const RepSpace& a, const Vector& va, const RepSpace& b, const Vector& vb,
                     const RepSpace& target);
/// Product of coordinate vectors of Sym^p and Sym^q (orthonormal monomial
/// coordinates), in Sym^{p+q}.
Vector vee_vectors(const RepSpace& a, const Vector& va, const RepSpace& b, const Vector& vb,
                   const RepSpace& target);

/// (α∨γ)⊗(β∨δ) for polynomials α, β, γ, δ, as a (generally non-symmetric)
/// matrix in the orthonormal monomial basis of Sym^{deg α + deg γ}.
Matrix vee_dyad(const Polynomial& alpha, const Polynomial& beta, const Polynomial& gamma,
                const Polynomial& delta);

/// g^p computed by p-fold iterated products of the metric.
KNElement iterated_g_power(KNAlgebra algebra, int n, int p);

/// g^p = p!·Id on the grade-p piece. For p <= 4 the closed form is
/// cross-checked against iterated_g_power and std::logic_error is thrown if
/// they differ by more than 1e-10.
KNElement g_power(KNAlgebra algebra, int n, int p);

}  // namespace curvelab
