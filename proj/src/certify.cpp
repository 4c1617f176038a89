#include "curvelab/certify.hpp"

#include "curvelab/parallel.hpp"
#include "curvelab/weitzenbock.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace curvelab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::ThorpeExact: return "thorpe_exact";
    case Method::GrassmannOpt: return "grassmann_opt";
    case Method::Hierarchy: return "hierarchy";
  }
  return "?";
}

const char* to_string(BoundDirection d) {
  return d == BoundDirection::AtLeast ? ">=" : "<=";
}

namespace {

// S = R − k Id for lower bounds, k Id − R for upper bounds; either way the
// bound holds iff sec_S >= 0.
CurvatureOperator shifted(const CurvatureOperator& r, Real k, BoundDirection direction) {
  const CurvatureOperator s = r - k * fixtures::identity(r.n());
  return direction == BoundDirection::AtLeast ? s : Real(-1) * s;
}

bool violates(Real sec_value, Real k, BoundDirection direction, Real margin) {
  return direction == BoundDirection::AtLeast ? sec_value < k - margin : sec_value > k + margin;
}

}  // namespace

std::optional<int> HierarchyTable::first_violation(Real tol) const {
  for (const auto& row : rows)
    if (row.lambda_min < -tol) return row.p;
  return std::nullopt;
}

HierarchyTable hierarchy_check(const CurvatureOperator& r, Real k, int p_max,
                               BoundDirection direction) {
  if (p_max < 1) throw std::invalid_argument("hierarchy_check: need pmax >= 1");
  const CurvatureOperator s = shifted(r, k, direction);
  HierarchyTable table;
  table.k = k;
  table.direction = direction;
  table.rows.resize(p_max);
  for (int p = 1; p <= p_max; ++p) cached_space(RepKind::TracelessSymmetric, r.n(), p);
  parallel_for(static_cast<std::size_t>(p_max), [&](std::size_t i) {
    const int p = static_cast<int>(i) + 1;
    const auto space = cached_space(RepKind::TracelessSymmetric, r.n(), p);
    table.rows[i] = {p, space->dim(), min_eigenvalue(curvature_term(s, space).mat)};
  });
  return table;
}

// ---------------------------------------------------------------------------
// Grassmannian optimization

namespace {

// f(x, y) = <R(x∧y), x∧y> = xᵀ C y with C the skew matrix of R(x∧y).
Matrix skew_of(const Vector& c, int n) {
  Matrix m = Matrix::Zero(n, n);
  for (int a = 0; a < c.size(); ++a) {
    const auto [i, j] = pair_at(n, a);
    m(i, j) = c(a);
    m(j, i) = -c(a);
  }
  return m;
}

Real objective(const CurvatureOperator& r, const TwoPlane& s) { return sec(r, s); }

}  // namespace

TwoPlane optimize_plane(const CurvatureOperator& r, TwoPlane plane, int sign,
                        const GrassmannOptions& options) {
  const int n = r.n();
  Real f = sign * objective(r, plane);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Matrix c = skew_of(r.matrix() * plane.bivector(), n);
    Vector gx = sign * 2 * (c * plane.y);
    Vector gy = sign * -2 * (c * plane.x);
    // horizontal part: moving inside the plane does not change it
    for (Vector* g : {&gx, &gy}) {
      *g -= plane.x.dot(*g) * plane.x;
      *g -= plane.y.dot(*g) * plane.y;
    }
    const Real gnorm = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
    if (gnorm <= options.gradient_tolerance) break;
    Real step = options.initial_step;
    bool moved = false;
    for (int halving = 0; halving < 60; ++halving, step /= 2) {
      TwoPlane trial;
      try {
        trial = TwoPlane::orthonormalized(plane.x - step * gx, plane.y - step * gy);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const Real ft = sign * objective(r, trial);
      if (ft < f) {
        plane = trial;
        f = ft;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return plane;
}

SecExtremes sec_extremes(const CurvatureOperator& r, int restarts, std::uint64_t seed) {
  GrassmannOptions options;
  options.restarts = restarts;
  return sec_extremes(r, options, seed);
}

SecExtremes sec_extremes(const CurvatureOperator& r, const GrassmannOptions& options,
                         std::uint64_t seed) {
  const int n = r.n();
  if (n < 2) throw std::invalid_argument("sec_extremes: need n >= 2");
  if (options.restarts < 0) throw std::invalid_argument("sec_extremes: negative restart count");

  // deterministic starts: the coordinate planes with smallest and largest
  // diagonal entry
  int amin = 0;
  int amax = 0;
  for (int a = 1; a < r.pairs(); ++a) {
    if (r(a, a) < r(amin, amin)) amin = a;
    if (r(a, a) > r(amax, amax)) amax = a;
  }
  const auto [i0, j0] = pair_at(n, amin);
  const auto [i1, j1] = pair_at(n, amax);

  const int runs = options.restarts + 1;
  std::vector<TwoPlane> mins(runs);
  std::vector<TwoPlane> maxs(runs);
  parallel_for(static_cast<std::size_t>(runs), [&](std::size_t idx) {
    TwoPlane start_min;
    TwoPlane start_max;
    if (idx == 0) {
      start_min = TwoPlane::coordinate(n, i0, j0);
      start_max = TwoPlane::coordinate(n, i1, j1);
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(idx)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> dist;
      const auto draw = [&] {
        for (;;) {
          Vector x(n), y(n);
          for (int k = 0; k < n; ++k) x(k) = dist(rng);
          for (int k = 0; k < n; ++k) y(k) = dist(rng);
          try {
            return TwoPlane::orthonormalized(x, y);
          } catch (const std::invalid_argument&) {
          }
        }
      };
      start_min = draw();
      start_max = draw();
    }
    mins[idx] = optimize_plane(r, start_min, +1, options);
    maxs[idx] = optimize_plane(r, start_max, -1, options);
  });

  SecExtremes out;
  out.restarts = options.restarts;
  out.argmin = mins[0];
  out.argmax = maxs[0];
  out.sec_min = sec(r, mins[0]);
  out.sec_max = sec(r, maxs[0]);
  for (int idx = 1; idx < runs; ++idx) {
    const Real lo = sec(r, mins[idx]);
    const Real hi = sec(r, maxs[idx]);
    if (lo < out.sec_min) {
      out.sec_min = lo;
      out.argmin = mins[idx];
    }
    if (hi > out.sec_max) {
      out.sec_max = hi;
      out.argmax = maxs[idx];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension four

ThorpeMaximum thorpe_maximize(const Matrix& s, Real tolerance) {
  if (s.rows() != 6 || s.cols() != 6)
    throw std::invalid_argument("thorpe_maximize: expected a 6x6 operator on Λ²R^4");
  const Matrix star = fixtures::hodge_star().matrix();
  int evaluations = 0;
  const auto mu = [&](Real t) {
    ++evaluations;
    return min_eigenvalue(s + t * star);
  };
  const Real bound = std::max(2 * operator_norm(s), Real(1));
  const Real ratio = (std::sqrt(Real(5)) - 1) / 2;
  Real a = -bound;
  Real b = bound;
  Real fa = mu(a);
  Real fb = mu(b);
  Real c = b - ratio * (b - a);
  Real d = a + ratio * (b - a);
  Real fc = mu(c);
  Real fd = mu(d);
  const Real slack = Real(1e-12) * std::max(Real(1), bound);
  while (b - a > tolerance) {
    // concavity: interior values can never fall below both endpoints
    if (std::min(fc, fd) < std::min(fa, fb) - slack)
      throw std::logic_error("thorpe_maximize: concavity violated during golden-section search");
    if (fc >= fd) {
      b = d;
      fb = fd;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = mu(c);
    } else {
      a = c;
      fa = fc;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = mu(d);
    }
  }
  ThorpeMaximum out;
  out.bracket = bound;
  // best of the evaluated points in the final bracket
  out.t_star = c;
  out.mu = fc;
  for (const auto& [t, f] : {std::pair{a, fa}, std::pair{b, fb}, std::pair{d, fd}}) {
    if (f > out.mu) {
      out.t_star = t;
      out.mu = f;
    }
  }
  out.evaluations = evaluations;
  return out;
}

Certificate thorpe_certify(const CurvatureOperator& r, Real k, bool strict,
                           BoundDirection direction, int restarts, std::uint64_t seed) {
  if (r.n() != 4) throw std::invalid_argument("thorpe_certify: requires n = 4");
  Certificate cert;
  cert.k = k;
  cert.direction = direction;
  cert.strict = strict;
  cert.method = Method::ThorpeExact;
  const CurvatureOperator s = shifted(r, k, direction);
  cert.thorpe = thorpe_maximize(s.matrix(), cert.tolerances.golden_section);
  const Real mu = cert.thorpe->mu;
  const bool ok = strict ? mu >= cert.tolerances.strict_margin : mu >= -cert.tolerances.nonstrict_margin;
  if (ok) {
    cert.verdict = Verdict::Certified;
    return cert;
  }
  cert.verdict = Verdict::Refuted;
  const SecExtremes ext = sec_extremes(r, restarts, seed);
  const bool lower = direction == BoundDirection::AtLeast;
  const TwoPlane& plane = lower ? ext.argmin : ext.argmax;
  const Real value = lower ? ext.sec_min : ext.sec_max;
  if (violates(value, k, direction, cert.tolerances.refutation_margin)) {
    cert.witness_plane = plane;
    cert.witness_sec = value;
  } else if (strict) {
    cert.note = "strict bound fails only at the boundary (extreme sec equals k within tolerance)";
  } else {
    cert.note = "no plane violating the bound by more than the refutation margin was found";
  }
  return cert;
}

Certificate certify(const CurvatureOperator& r, Real k, bool strict, BoundDirection direction,
                    int p_max, int restarts, std::uint64_t seed) {
  if (r.n() == 4) return thorpe_certify(r, k, strict, direction, restarts, seed);
  Certificate cert;
  cert.k = k;
  cert.direction = direction;
  cert.strict = strict;
  const SecExtremes ext = sec_extremes(r, restarts, seed);
  const bool lower = direction == BoundDirection::AtLeast;
  const Real value = lower ? ext.sec_min : ext.sec_max;
  if (violates(value, k, direction, cert.tolerances.refutation_margin)) {
    cert.verdict = Verdict::Refuted;
    cert.method = Method::GrassmannOpt;
    cert.witness_plane = lower ? ext.argmin : ext.argmax;
    cert.witness_sec = value;
    return cert;
  }
  cert.hierarchy = hierarchy_check(r, k, p_max, direction);
  cert.method = Method::Hierarchy;
  if (auto p = cert.hierarchy->first_violation(cert.tolerances.hierarchy)) {
    cert.verdict = Verdict::Refuted;
    cert.note = "necessary condition fails at p = " + std::to_string(*p);
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.note = "inconclusive_for_certification: finitely many necessary conditions hold";
  }
  return cert;
}

std::pair<Vector, Vector> selfdual_split(const Vector& alpha) {
  if (alpha.size() != 6) throw std::invalid_argument("selfdual_split: expected an element of Λ²R^4");
  const Vector star_alpha = fixtures::hodge_star().matrix() * alpha;
  return {(alpha + star_alpha) / 2, (alpha - star_alpha) / 2};
}

std::optional<HierarchyWitness> witness_search(const CurvatureOperator& r, Real k, int p_max,
                                               Real tol) {
  if (p_max < 1) throw std::invalid_argument("witness_search: need pmax >= 1");
  const CurvatureOperator s = r - k * fixtures::identity(r.n());
  for (int p = 1; p <= p_max; ++p) {
    const auto space = cached_space(RepKind::TracelessSymmetric, r.n(), p);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(curvature_term(s, space).mat);
    if (solver.info() != Eigen::Success) throw std::runtime_error("witness_search: eigensolver failed");
    const Real lambda = solver.eigenvalues()(0);
    if (lambda < -tol) {
      const Vector v = solver.eigenvectors().col(0);
      return HierarchyWitness{p, v, space->polynomial(v), lambda};
    }
  }
  return std::nullopt;
}

}  // namespace curvelab
