#pragma once

// Independent reference computations used only by the tests.

#include "curvelab/curvature.hpp"
#include "curvelab/littlewood.hpp"
#include "curvelab/multilinear.hpp"
#include "curvelab/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using curvelab::Matrix;
using curvelab::Real;
using curvelab::Vector;

// ---------------------------------------------------------------------------
// Sectional curvature on Gr_2(R^4) ≅ S²×S²: unit decomposable 2-vectors are
// exactly (u₊ + u₋)/√2 with u± unit in the ±1 eigenspaces of the Hodge star.

struct SelfDualFrame {
  Matrix plus;   // 6×3, orthonormal columns spanning Λ²₊
  Matrix minus;  // 6×3, orthonormal columns spanning Λ²₋
};

inline SelfDualFrame selfdual_frame() {
  const Real s = 1 / std::sqrt(Real(2));
  auto idx = [](int i, int j) { return curvelab::pair_index(4, i, j); };
  SelfDualFrame f{Matrix::Zero(6, 3), Matrix::Zero(6, 3)};
  const int pairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  const Real star_sign[3] = {1, -1, 1};
  for (int c = 0; c < 3; ++c) {
    const int a = idx(pairs[c][0][0], pairs[c][0][1]);
    const int b = idx(pairs[c][1][0], pairs[c][1][1]);
    f.plus(a, c) = s;
    f.plus(b, c) = s * star_sign[c];
    f.minus(a, c) = s;
    f.minus(b, c) = -s * star_sign[c];
  }
  return f;
}

inline std::vector<Vector> fibonacci_sphere(int m) {
  std::vector<Vector> pts;
  const Real golden = M_PI * (3 - std::sqrt(Real(5)));
  for (int i = 0; i < m; ++i) {
    const Real z = 1 - (2 * Real(i) + 1) / m;
    const Real r = std::sqrt(std::max(Real(0), 1 - z * z));
    Vector v(3);
    v << r * std::cos(golden * i), r * std::sin(golden * i), z;
    pts.push_back(v);
  }
  return pts;
}

struct GridResult {
  Real sec_min;
  Vector plus;
  Vector minus;
};

// Grid over S²×S² with m² points, then projected-gradient polishing of the
// `polish` best grid points in the (u₊, u₋) parametrization.
inline GridResult grid_sec_min_n4(const curvelab::CurvatureOperator& r, int m = 400, int polish = 8) {
  const auto frame = selfdual_frame();
  const Matrix a = frame.plus.transpose() * r.matrix() * frame.plus;
  const Matrix b = frame.plus.transpose() * r.matrix() * frame.minus;
  const Matrix c = frame.minus.transpose() * r.matrix() * frame.minus;
  // sec = ½ (u₊ᵀ A u₊ + 2 u₊ᵀ B u₋ + u₋ᵀ C u₋)
  auto f = [&](const Vector& up, const Vector& um) {
    return (up.dot(a * up) + 2 * up.dot(b * um) + um.dot(c * um)) / 2;
  };
  const auto pts = fibonacci_sphere(m);
  std::vector<Real> cc(m);
  for (int j = 0; j < m; ++j) cc[j] = pts[j].dot(c * pts[j]);
  std::vector<std::pair<Real, std::pair<int, int>>> best;
  for (int i = 0; i < m; ++i) {
    const Vector bu = b.transpose() * pts[i];
    const Real aa = pts[i].dot(a * pts[i]);
    for (int j = 0; j < m; ++j) {
      const Real v = (aa + 2 * bu.dot(pts[j]) + cc[j]) / 2;
      if (static_cast<int>(best.size()) < polish || v < best.back().first) {
        best.push_back({v, {i, j}});
        std::sort(best.begin(), best.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (static_cast<int>(best.size()) > polish) best.pop_back();
      }
    }
  }
  GridResult out{best.front().first, pts[best.front().second.first], pts[best.front().second.second]};
  const Real lipschitz = std::max({a.norm(), b.norm(), c.norm(), Real(1e-3)});
  for (const auto& cand : best) {
    Vector up = pts[cand.second.first];
    Vector um = pts[cand.second.second];
    const Real step = Real(0.25) / lipschitz;
    for (int it = 0; it < 20000; ++it) {
      Vector gp = a * up + b * um;
      Vector gm = b.transpose() * up + c * um;
      gp -= up.dot(gp) * up;
      gm -= um.dot(gm) * um;
      if (std::sqrt(gp.squaredNorm() + gm.squaredNorm()) < 1e-13) break;
      up = (up - step * gp).normalized();
      um = (um - step * gm).normalized();
    }
    const Real v = f(up, um);
    if (v < out.sec_min) out = {v, up, um};
  }
  return out;
}

inline Vector grid_bivector(const GridResult& g) {
  const auto frame = selfdual_frame();
  return (frame.plus * g.plus + frame.minus * g.minus) / std::sqrt(Real(2));
}

// ---------------------------------------------------------------------------
// Monte-Carlo integration over S^{n-1} (unnormalized measure).

struct MonteCarlo {
  Real mean;
  Real standard_error;
};

inline MonteCarlo mc_integrate(const curvelab::Polynomial& phi, int samples, std::uint64_t seed) {
  const int n = phi.n();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  Real sum = 0;
  Real sum_sq = 0;
  std::vector<Real> x(n);
  for (int s = 0; s < samples; ++s) {
    Real norm = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = dist(rng);
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] /= norm;
    const Real v = phi.evaluate(x);
    sum += v;
    sum_sq += v * v;
  }
  const Real area = curvelab::sphere_area(n);
  const Real mean = sum / samples;
  const Real var = std::max(Real(0), sum_sq / samples - mean * mean);
  return {area * mean, area * std::sqrt(var / samples)};
}

// ---------------------------------------------------------------------------
// Littlewood–Richardson coefficients through Kostka numbers: the monomial
// expansion of s_λ s_μ is triangular in the Schur basis with respect to
// dominance order.

// Number of semistandard tableaux of shape λ with content `weight`.
inline std::int64_t kostka(const curvelab::Partition& lambda, std::vector<int> weight) {
  // peel off the largest letter as a horizontal strip
  while (!weight.empty() && weight.back() == 0) weight.pop_back();
  if (weight.empty()) return lambda.size() == 0 ? 1 : 0;
  const int k = weight.back();
  weight.pop_back();
  std::int64_t total = 0;
  // choose μ ⊆ λ with λ/μ a horizontal strip of size k
  std::vector<int> mu(lambda.rows());
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == lambda.rows()) {
      if (left == 0) total += kostka(curvelab::Partition(mu), weight);
      return;
    }
    const int hi = lambda.part(row);
    const int lo = lambda.part(row + 1);
    for (int m = hi; m >= lo; --m) {
      if (hi - m > left) break;
      mu[row] = m;
      rec(row + 1, left - (hi - m));
    }
  };
  rec(0, k);
  return total;
}

inline bool dominates(const curvelab::Partition& a, const curvelab::Partition& b) {
  int sa = 0;
  int sb = 0;
  for (int i = 0; i < std::max(a.rows(), b.rows()); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

inline std::map<curvelab::Partition, std::int64_t> schur_product(const curvelab::Partition& lambda,
                                                                 const curvelab::Partition& mu) {
  const int total = lambda.size() + mu.size();
  const int rows = lambda.rows() + mu.rows();
  auto parts = curvelab::partitions_of(total, rows);  // dominance-compatible (lex decreasing)
  std::map<curvelab::Partition, std::int64_t> coeff;
  for (const auto& nu : parts) {
    // coefficient of x^ν in s_λ s_μ = Σ_{α+β=ν} K_{λα} K_{μβ} over compositions
    std::int64_t mono = 0;
    std::vector<int> alpha(rows, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == rows) {
        std::vector<int> beta(rows);
        for (int k = 0; k < rows; ++k) beta[k] = nu.part(k) - alpha[k];
        mono += kostka(lambda, alpha) * kostka(mu, beta);
        return;
      }
      for (int x = 0; x <= nu.part(i); ++x) {
        alpha[i] = x;
        rec(i + 1);
      }
      alpha[i] = 0;
    };
    rec(0);
    for (const auto& [kappa, c] : coeff)
      if (kappa != nu && dominates(kappa, nu)) mono -= c * kostka(kappa, nu.parts());
    if (mono != 0) coeff[nu] = mono;
  }
  return coeff;
}

}  // namespace oracle
