#include "curvelab/spherical.hpp"

#include "curvelab/weitzenbock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvelab {

Real integrate_monomial(const MultiIndex& alpha) {
  const int n = alpha.size();
  if (n < 1) throw std::invalid_argument("integrate_monomial: empty multi-index");
  Real num = 2;
  for (int a : alpha.exponents) {
    if (a < 0) throw std::invalid_argument("integrate_monomial: negative exponent");
    if (a % 2 != 0) return 0;
    num *= std::tgamma((Real(a) + 1) / 2);
  }
  return num / std::tgamma((Real(n) + alpha.degree()) / 2);
}

Real integrate(const Polynomial& phi) {
  Real total = 0;
  for (const auto& [m, c] : phi.terms()) total += c * integrate_monomial(m);
  return total;
}

Real sphere_area(int n) { return integrate_monomial(MultiIndex{std::vector<int>(n, 0)}); }

Real c_constant_for(const Polynomial& phi) {
  if (phi.is_zero()) throw std::invalid_argument("c_constant: zero polynomial");
  const Real denom = integrate(phi * phi);
  if (!(denom > 0)) throw std::invalid_argument("c_constant: degenerate polynomial");
  return dual_inner_product(phi, phi) / denom;
}

Real c_constant(int n, int p) {
  if (n < 2) throw std::invalid_argument("c_constant: need n >= 2");
  if (p < 1) throw std::invalid_argument("c_constant: need p >= 1");
  return c_constant_for(real_power_polynomial(n, p));
}

Polynomial random_harmonic(int n, int p, std::mt19937_64& rng) {
  const auto space = cached_space(RepKind::TracelessSymmetric, n, p);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(space->dim());
  for (int i = 0; i < v.size(); ++i) v(i) = dist(rng);
  return space->polynomial(v);
}

CConstantCheck c_constant_checked(int n, int p, int samples, std::uint64_t seed) {
  CConstantCheck out;
  out.value = c_constant(n, p);
  Real lo = out.value;
  Real hi = out.value;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Real c = c_constant_for(random_harmonic(n, p, rng));
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  out.samples = samples + 1;
  out.relative_spread = (hi - lo) / out.value;
  return out;
}

Polynomial integral_form_integrand(const CurvatureOperator& r, const Polynomial& phi,
                                   const Polynomial& psi) {
  const int n = r.n();
  if (phi.n() != n || psi.n() != n)
    throw std::invalid_argument("integral_form_integrand: dimension mismatch");
  std::vector<Polynomial> dphi;
  std::vector<Polynomial> dpsi;
  for (int a = 0; a < r.pairs(); ++a) {
    const auto [i, j] = pair_at(n, a);
    dphi.push_back(rotation_derivative(phi, i, j));
    dpsi.push_back(rotation_derivative(psi, i, j));
  }
  Polynomial out(n);
  for (int b = 0; b < r.pairs(); ++b) {
    Polynomial weighted(n);
    for (int a = 0; a < r.pairs(); ++a)
      if (r(a, b) != 0) weighted += r(a, b) * dphi[a];
    if (!weighted.is_zero()) out += weighted * dpsi[b];
  }
  return out;
}

Real IntegralFormulaReport::worst_relative() const {
  Real w = 0;
  for (const auto& pr : pairs) w = std::max(w, pr.relative_error);
  return w;
}

IntegralFormulaReport verify_integral_formula(const CurvatureOperator& r, int p, int trials,
                                              std::uint64_t seed) {
  const int n = r.n();
  if (n < 2) throw std::invalid_argument("verify_integral_formula: need n >= 2");
  if (p < 2) throw std::invalid_argument("verify_integral_formula: need p >= 2");
  IntegralFormulaReport report;
  report.n = n;
  report.p = p;
  const auto check = c_constant_checked(n, p, 3, seed ^ 0x5eedULL);
  report.c = check.value;
  report.c_spread = check.relative_spread;

  const auto space = cached_space(RepKind::TracelessSymmetric, n, p);
  const SymmetricEndomorphism k = curvature_term(r, space);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Polynomial phi = random_harmonic(n, p, rng);
    const Polynomial psi = random_harmonic(n, p, rng);
    IntegralFormulaPair pr;
    pr.lhs = bilinear_form(k, space->coordinates(phi), space->coordinates(psi));
    pr.rhs = report.c * integrate(integral_form_integrand(r, phi, psi));
    const Real scale = std::max(std::abs(pr.lhs), std::abs(pr.rhs));
    pr.relative_error = scale > Real(1e-12) ? std::abs(pr.lhs - pr.rhs) / scale : 0;
    report.pairs.push_back(pr);
  }
  return report;
}

}  // namespace curvelab
