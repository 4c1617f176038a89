#pragma once

// Closed-form expressions for K(R, Λ^p) and K(R, Sym^p_0) as Kulkarni–Nomizu
// products of the irreducible components of R with powers of the metric.

#include "curvelab/curvature.hpp"
#include "curvelab/weitzenbock.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace curvelab {

struct ThmBCoefficients {
  // K(R, Λ^p) = (A' R_U + B' R_L + C' R_W + D' R_∧4) ⊘ g^{p-2}/(p-2)!
  Real wedge_u{0}, wedge_l{0}, wedge_w{0}, wedge_w4{0};
  // K(R, Sym^p_0) = (A K(R_U,Sym²_0) + B K(R_L,Sym²_0) + C K(R_W,Sym²_0)) ⊚ g^{p-2}/(p-2)!
  Real sym_u{0}, sym_l{0}, sym_w{0};
};

/// Coefficients for the given (n, p); requires p >= 2 and n >= 4.
ThmBCoefficients thmB_coefficients(int n, int p);

/// Closed-form K(R, Λ^p) for 2 <= p <= n-2.
SymmetricEndomorphism thmB_wedge_rhs(const CurvatureOperator& r, int p);
/// Closed-form K(R, Sym^p_0) for p >= 2, n >= 4.
SymmetricEndomorphism thmB_sym_rhs(const CurvatureOperator& r, int p);

struct ThmBCase {
  int n{0};
  int p{0};
  std::string rep;           // "wedge" or "sym0"
  int trials{0};
  Real worst_abs{0};         // max-abs entry discrepancy over trials
  Real worst_spectral{0};    // spectral distance over trials
};

struct ThmBReport {
  std::vector<ThmBCase> cases;
  Real tolerance{1e-8};
  Real worst() const;
  bool pass() const { return worst() <= tolerance; }
};

/// Compares the closed forms with the brute-force curvature terms on
/// `trials` random operators (entries uniform in [-1,1]) for each
/// p = 2..p_max; wedge cases are restricted to p <= n-2.
ThmBReport verify_thmB(int n, int p_max, int trials, std::uint64_t seed, Real tolerance = 1e-8);

/// Discrepancy of both closed forms for one operator at one p; wedge entries
/// are skipped (reported as 0) outside 2 <= p <= n-2.
struct ThmBDiscrepancy {
  Real wedge_abs{0}, wedge_spectral{0};
  Real sym_abs{0}, sym_spectral{0};
};
ThmBDiscrepancy thmB_discrepancy(const CurvatureOperator& r, int p);

}  // namespace curvelab
