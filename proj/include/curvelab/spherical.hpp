#pragma once

// Exact integration of polynomials over the unit sphere S^{n-1} with the
// unnormalized surface measure, and the constant c_{p,n} relating that
// integral to the dual-operator inner product on harmonic polynomials.

#include "curvelab/curvature.hpp"
#include "curvelab/multilinear.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace curvelab {

/// ∫ x^α dσ: zero if some α_i is odd, else 2 Π Γ((α_i+1)/2) / Γ((n+|α|)/2).
Real integrate_monomial(const MultiIndex& alpha);
Real integrate(const Polynomial& phi);
/// Surface area of S^{n-1}.
Real sphere_area(int n);

/// ||φ||² / ∫ φ² dσ for a nonzero harmonic φ.
Real c_constant_for(const Polynomial& phi);
/// c_{p,n} evaluated at φ = Re (x_1 + i x_2)^p (x_1 for p = 1).
Real c_constant(int n, int p);

struct CConstantCheck {
  Real value{0};
  Real relative_spread{0};  // (max − min) / value over the sampled φ
  int samples{0};
};
/// c_{p,n} from φ_p and from `samples` random harmonic polynomials.
CConstantCheck c_constant_checked(int n, int p, int samples, std::uint64_t seed);

/// Random harmonic polynomial of degree p with coordinates uniform in [-1,1].
Polynomial random_harmonic(int n, int p, std::mt19937_64& rng);

/// R(x, ∇φ, x, ∇ψ) = Σ_{a,b} R_ab (D_a φ)(D_b ψ) as a polynomial.
Polynomial integral_form_integrand(const CurvatureOperator& r, const Polynomial& phi,
                                   const Polynomial& psi);

struct IntegralFormulaPair {
  Real lhs{0};  // <K(R,Sym^p_0)φ, ψ>
  Real rhs{0};  // c_{p,n} ∫ R(x,∇φ,x,∇ψ) dσ
  Real relative_error{0};
};

struct IntegralFormulaReport {
  int n{0};
  int p{0};
  Real c{0};
  Real c_spread{0};
  std::vector<IntegralFormulaPair> pairs;
  Real worst_relative() const;
};

/// Checks the integral formula on `trials` random harmonic pairs.
IntegralFormulaReport verify_integral_formula(const CurvatureOperator& r, int p, int trials,
                                              std::uint64_t seed);

}  // namespace curvelab
