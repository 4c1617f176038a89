#include "curvelab/closedform.hpp"

#include "curvelab/knalgebra.hpp"
#include "curvelab/multilinear.hpp"
#include "curvelab/parallel.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace curvelab {

ThmBCoefficients thmB_coefficients(int n, int p) {
  if (p < 2) throw std::invalid_argument("closed form: need p >= 2");
  if (n < 4) throw std::invalid_argument("closed form: need n >= 4");
  ThmBCoefficients c;
  c.wedge_u = Real(2 * (n - p)) / (p - 1);
  c.wedge_l = Real(n - 2 * p) / (p - 1);
  c.wedge_w = -2;
  c.wedge_w4 = 4;
  c.sym_u = Real(n + p - 2) / (n * (p - 1));
  c.sym_l = Real(n + 2 * p - 4) / (n * (p - 1));
  c.sym_w = 1;
  return c;
}

namespace {

// a ⊚ g^{p-2}/(p-2)! or a ⊘ g^{p-2}/(p-2)!
KNElement times_normalized_g_power(const KNElement& a, int p) {
  KNElement gp = g_power(a.algebra, a.n(), p - 2);
  gp.mat /= static_cast<Real>(factorial(p - 2));
  return kn_product(a, gp);
}

}  // namespace

SymmetricEndomorphism thmB_wedge_rhs(const CurvatureOperator& r, int p) {
  const int n = r.n();
  if (p < 2 || p > n - 2)
    throw std::invalid_argument("closed form for Λ^p: need 2 <= p <= n-2 (n = " + std::to_string(n) +
                                ", p = " + std::to_string(p) + ")");
  const auto c = thmB_coefficients(n, p);
  const auto d = decompose(r);
  const CurvatureOperator bracket =
      c.wedge_u * d.r_u + c.wedge_l * d.r_l + c.wedge_w * d.r_w + c.wedge_w4 * d.r_w4;
  const KNElement rhs = times_normalized_g_power(kn_element(KNAlgebra::Exterior, n, 2, bracket.matrix()), p);
  return {rhs.space, rhs.mat, 0};
}

SymmetricEndomorphism thmB_sym_rhs(const CurvatureOperator& r, int p) {
  const int n = r.n();
  const auto c = thmB_coefficients(n, p);
  const auto d = decompose(r);
  const auto sym2 = cached_space(RepKind::TracelessSymmetric, n, 2);
  const Matrix bracket = c.sym_u * curvature_term(d.r_u, sym2).mat +
                         c.sym_l * curvature_term(d.r_l, sym2).mat +
                         c.sym_w * curvature_term(d.r_w, sym2).mat;
  const KNElement rhs =
      times_normalized_g_power(kn_element(KNAlgebra::SymmetricTraceless, n, 2, bracket), p);
  return {rhs.space, rhs.mat, 0};
}

ThmBDiscrepancy thmB_discrepancy(const CurvatureOperator& r, int p) {
  const int n = r.n();
  ThmBDiscrepancy out;
  if (p <= n - 2) {
    const auto rhs = thmB_wedge_rhs(r, p);
    const auto lhs = curvature_term(r, cached_space(RepKind::Exterior, n, p));
    out.wedge_abs = max_abs_diff(lhs.mat, rhs.mat);
    out.wedge_spectral = spectral_distance(lhs.mat, rhs.mat);
  }
  const auto rhs = thmB_sym_rhs(r, p);
  const auto lhs = curvature_term(r, cached_space(RepKind::TracelessSymmetric, n, p));
  out.sym_abs = max_abs_diff(lhs.mat, rhs.mat);
  out.sym_spectral = spectral_distance(lhs.mat, rhs.mat);
  return out;
}

Real ThmBReport::worst() const {
  Real w = 0;
  for (const auto& c : cases) w = std::max(w, c.worst_abs);
  return w;
}

ThmBReport verify_thmB(int n, int p_max, int trials, std::uint64_t seed, Real tolerance) {
  if (n < 4) throw std::invalid_argument("verify_thmB: need n >= 4");
  if (p_max < 2) throw std::invalid_argument("verify_thmB: need pmax >= 2");
  if (trials < 1) throw std::invalid_argument("verify_thmB: need trials >= 1");
  std::mt19937_64 rng(seed);
  std::vector<CurvatureOperator> ops;
  for (int t = 0; t < trials; ++t) ops.push_back(fixtures::random(n, rng));

  // warm the basis cache serially so that workers only read it
  for (int p = 2; p <= p_max; ++p) {
    cached_space(RepKind::TracelessSymmetric, n, p);
    if (p <= n - 2) cached_space(RepKind::Exterior, n, p);
  }

  ThmBReport report;
  report.tolerance = tolerance;
  for (int p = 2; p <= p_max; ++p) {
    std::vector<ThmBDiscrepancy> results(ops.size());
    parallel_for(ops.size(), [&](std::size_t t) { results[t] = thmB_discrepancy(ops[t], p); });
    ThmBCase wedge{n, p, "wedge", trials, 0, 0};
    ThmBCase sym{n, p, "sym0", trials, 0, 0};
    for (const auto& r : results) {
      wedge.worst_abs = std::max(wedge.worst_abs, r.wedge_abs);
      wedge.worst_spectral = std::max(wedge.worst_spectral, r.wedge_spectral);
      sym.worst_abs = std::max(sym.worst_abs, r.sym_abs);
      sym.worst_spectral = std::max(sym.worst_spectral, r.sym_spectral);
    }
    if (p <= n - 2) report.cases.push_back(wedge);
    report.cases.push_back(sym);
  }
  return report;
}

}  // namespace curvelab
