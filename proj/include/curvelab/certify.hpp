#pragma once

// Sectional-curvature bounds: the necessary conditions K(R − k Id, Sym^p_0) ⪰ 0,
// optimization of sec over the Grassmannian of 2-planes, and the exact
// dimension-four test via the Hodge star (sec >= k iff R − k Id + t* ⪰ 0 for
// some t).

#include "curvelab/curvature.hpp"
#include "curvelab/multilinear.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvelab {

enum class Verdict { Certified, Refuted, Inconclusive };
enum class Method { ThorpeExact, GrassmannOpt, Hierarchy };
/// AtLeast: sec >= k. AtMost: sec <= k.
enum class BoundDirection { AtLeast, AtMost };

const char* to_string(Verdict v);
const char* to_string(Method m);
const char* to_string(BoundDirection d);

/// Tolerances shared by all certifiers.
struct CertifyTolerances {
  Real strict_margin{1e-9};     // strict certification needs max μ >= +margin
  Real nonstrict_margin{1e-9};  // non-strict certification needs max μ >= −margin
  Real refutation_margin{1e-9}; // a witness plane must violate the bound by more
  Real hierarchy{1e-9};         // λ_min below −hierarchy counts as a violation
  Real golden_section{1e-10};
};

struct HierarchyRow {
  int p{0};
  int dim{0};
  Real lambda_min{0};
};

struct HierarchyTable {
  Real k{0};
  BoundDirection direction{BoundDirection::AtLeast};
  std::vector<HierarchyRow> rows;  // p = 1..p_max
  /// First p with λ_min < −tol, if any.
  std::optional<int> first_violation(Real tol) const;
};

/// λ_min K(S, Sym^p_0) for p = 1..p_max with S = R − k Id (AtLeast) or
/// S = k Id − R (AtMost). A negative entry refutes the bound; an all
/// nonnegative table is only a necessary condition.
HierarchyTable hierarchy_check(const CurvatureOperator& r, Real k, int p_max,
                               BoundDirection direction = BoundDirection::AtLeast);

struct SecExtremes {
  Real sec_min{0};
  Real sec_max{0};
  TwoPlane argmin;
  TwoPlane argmax;
  int restarts{0};
};

struct GrassmannOptions {
  int restarts{100};
  int max_iterations{10000};
  Real gradient_tolerance{1e-9};
  Real initial_step{0.5};
};

/// Local optimization of sec from a given orthonormal start; `sign` = +1
/// minimizes, −1 maximizes. Returns the final plane.
TwoPlane optimize_plane(const CurvatureOperator& r, TwoPlane start, int sign,
                        const GrassmannOptions& options = {});

/// Projected-gradient search for the extremes of sec with random restarts
/// (plus the best coordinate planes as deterministic starts).
SecExtremes sec_extremes(const CurvatureOperator& r, int restarts, std::uint64_t seed);
SecExtremes sec_extremes(const CurvatureOperator& r, const GrassmannOptions& options,
                         std::uint64_t seed);

struct ThorpeMaximum {
  Real t_star{0};
  Real mu{0};  // λ_min(S + t_star *)
  Real bracket{0};
  int evaluations{0};
};

/// max_t λ_min(S + t *) by golden-section search on |t| <= max(2|S|, 1). The
/// function is concave; a bracketing violation throws std::logic_error.
ThorpeMaximum thorpe_maximize(const Matrix& s, Real tolerance = 1e-10);

struct Certificate {
  Real k{0};
  BoundDirection direction{BoundDirection::AtLeast};
  bool strict{false};
  Verdict verdict{Verdict::Inconclusive};
  Method method{Method::Hierarchy};
  std::optional<ThorpeMaximum> thorpe;
  std::optional<TwoPlane> witness_plane;
  std::optional<Real> witness_sec;
  std::optional<HierarchyTable> hierarchy;
  CertifyTolerances tolerances;
  std::string note;
};

/// Exact test in dimension four. Throws std::invalid_argument for n != 4.
/// Refutations carry a witness plane when the Grassmannian search finds one
/// violating the bound by more than the refutation margin.
Certificate thorpe_certify(const CurvatureOperator& r, Real k, bool strict,
                           BoundDirection direction = BoundDirection::AtLeast,
                           int restarts = 20, std::uint64_t seed = 0xC04A7);

/// Dispatch: n = 4 uses thorpe_certify; otherwise a Grassmannian search for a
/// violating plane, then the hierarchy table. Never certifies for n != 4.
Certificate certify(const CurvatureOperator& r, Real k, bool strict, BoundDirection direction,
                    int p_max, int restarts, std::uint64_t seed);

/// (α + *α)/2, (α − *α)/2 for α in Λ²R^4.
std::pair<Vector, Vector> selfdual_split(const Vector& alpha);

struct HierarchyWitness {
  int p{0};
  Vector eigenvector;      // orthonormal coordinates in Sym^p_0
  Polynomial polynomial;   // the same vector as a harmonic polynomial
  Real value{0};           // its eigenvalue, < −tol
};

/// First p in 1..p_max at which K(R − k Id, Sym^p_0) has an eigenvalue below
/// −tol, with its eigenvector.
std::optional<HierarchyWitness> witness_search(const CurvatureOperator& r, Real k, int p_max,
                                               Real tol = 1e-9);

}  // namespace curvelab
