#include "doctest.h"

#include "curvelab/weitzenbock.hpp"

#include <cmath>
#include <random>

using namespace curvelab;

namespace {

Real pow2(int e) { return std::pow(Real(2), e); }
Real fact(int k) { return static_cast<Real>(factorial(k)); }

// e_i ↦ (−1)^i e_0∧...ê_i...∧e_{n-1}
Matrix complement_map(int n) {
  const auto space = cached_space(RepKind::Exterior, n, n - 1);
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx;
    for (int k = 0; k < n; ++k)
      if (k != i) idx.push_back(k);
    p(space->index_of(WedgeIndex{idx}), i) = (i % 2 == 0) ? 1 : -1;
  }
  return p;
}

Vector gamma_vector(int n, int p) {
  const auto space = cached_space(RepKind::Exterior, n, p);
  std::vector<int> a{0, 1};
  std::vector<int> b{2, 3};
  for (int k = 4; k < p + 2; ++k) {
    a.push_back(k);
    b.push_back(k);
  }
  return space->wedge_coordinates({{a, 1}, {b, 1}});
}

}  // namespace

TEST_CASE("Ricci identities") {
  std::mt19937_64 rng(41);
  for (int n = 3; n <= 6; ++n) {
    const auto r = fixtures::random(n, rng);
    const Matrix ric = ricci(r);
    CHECK(max_abs_diff(curvature_term(r, cached_space(RepKind::Exterior, n, 1)).mat, ric) <= 1e-12);
    CHECK(max_abs_diff(curvature_term(r, cached_space(RepKind::TracelessSymmetric, n, 1)).mat, ric) <= 1e-12);
    const Matrix c = complement_map(n);
    const Matrix k = curvature_term(r, cached_space(RepKind::Exterior, n, n - 1)).mat;
    CHECK(max_abs_diff(c.transpose() * k * c, ric) <= 1e-12);
  }
}

TEST_CASE("trivial representations have zero curvature term") {
  std::mt19937_64 rng(43);
  const auto r = fixtures::random(4, rng);
  CHECK(curvature_term(r, cached_space(RepKind::Exterior, 4, 0)).mat.cwiseAbs().maxCoeff() == 0);
  CHECK(curvature_term(r, cached_space(RepKind::Exterior, 4, 4)).mat.cwiseAbs().maxCoeff() == 0);
  CHECK(curvature_term(r, cached_space(RepKind::Symmetric, 4, 0)).mat.cwiseAbs().maxCoeff() == 0);
  CHECK_THROWS_AS(curvature_term(r, cached_space(RepKind::Exterior, 5, 2)), std::invalid_argument);
}

TEST_CASE("Casimir values of the identity operator") {
  for (int n : {3, 4, 5}) {
    const auto id = fixtures::identity(n);
    for (int p = 1; p <= 4; ++p) {
      const auto k = curvature_term(id, cached_space(RepKind::TracelessSymmetric, n, p));
      CHECK(max_abs_diff(k.mat, p * (p + n - 2) * Matrix::Identity(k.dim(), k.dim())) <= 1e-10);
    }
    for (int p = 0; p <= n; ++p) {
      const auto k = curvature_term(id, cached_space(RepKind::Exterior, n, p));
      CHECK(max_abs_diff(k.mat, p * (n - p) * Matrix::Identity(k.dim(), k.dim())) <= 1e-12);
    }
  }
}

TEST_CASE("Λ^4 operators act trivially on traceless symmetric powers") {
  for (int p = 2; p <= 4; ++p) {
    const auto k = curvature_term(fixtures::hodge_star(), cached_space(RepKind::TracelessSymmetric, 4, p));
    CHECK(k.mat.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("quadratic forms of the component test elements") {
  for (int n : {4, 5}) {
    for (int p = 2; p <= 4; ++p) {
      const auto space = cached_space(RepKind::TracelessSymmetric, n, p);
      const Vector phi = space->coordinates(real_power_polynomial(n, p));
      const Real base = p * p * fact(p - 1);
      CHECK(static_cast<double>(quadratic_form(curvature_term(fixtures::r_u(n), space), phi)) ==
            doctest::Approx(static_cast<double>((n + p - 2) * pow2(p - 1) * base)).epsilon(1e-14));
      CHECK(static_cast<double>(quadratic_form(curvature_term(fixtures::r_l(n), space), phi)) ==
            doctest::Approx(static_cast<double>((n + 2 * p - 4) * pow2(p - 2) * base)).epsilon(1e-14));
      CHECK(static_cast<double>(quadratic_form(curvature_term(fixtures::r_w(n), space), phi)) ==
            doctest::Approx(static_cast<double>((2 * p - 2) * pow2(p - 2) * base)).epsilon(1e-14));
    }
  }
  const int n = 6;
  for (int p = 2; p <= n - 2; ++p) {
    const auto space = cached_space(RepKind::Exterior, n, p);
    std::vector<int> first(p);
    for (int i = 0; i < p; ++i) first[i] = i;
    const Vector beta = space->wedge_coordinates({{first, 1}});
    const Vector gamma = gamma_vector(n, p);
    CHECK(std::abs(quadratic_form(curvature_term(fixtures::r_u(n), space), beta) - p * (n - p)) <= 1e-12);
    CHECK(std::abs(quadratic_form(curvature_term(fixtures::r_l(n), space), beta) - (n - 2 * p)) <= 1e-12);
    CHECK(std::abs(quadratic_form(curvature_term(fixtures::r_w(n), space), gamma) + 8) <= 1e-12);
    CHECK(std::abs(quadratic_form(curvature_term(fixtures::r_w4(n), space), gamma) - 8) <= 1e-12);
  }
}

TEST_CASE("linearity and equivariance") {
  std::mt19937_64 rng(47);
  const int n = 5;
  const auto r1 = fixtures::random(n, rng);
  const auto r2 = fixtures::random(n, rng);
  const Real a = 0.37;
  const Real b = -1.91;
  const Matrix q = random_orthogonal(n, rng);
  for (auto kind : {RepKind::Exterior, RepKind::Symmetric, RepKind::TracelessSymmetric}) {
    for (int p = 1; p <= 3; ++p) {
      const auto space = cached_space(kind, n, p);
      const Matrix lhs = curvature_term(a * r1 + b * r2, space).mat;
      const Matrix rhs = a * curvature_term(r1, space).mat + b * curvature_term(r2, space).mat;
      CHECK(max_abs_diff(lhs, rhs) <= 1e-10);

      const Matrix rho = representation_matrix(*space, q);
      const Matrix rotated = curvature_term(transform(r1, q), space).mat;
      CHECK(max_abs_diff(rotated, rho * curvature_term(r1, space).mat * rho.transpose()) <= 1e-8);
    }
  }
}

TEST_CASE("positive operators give positive curvature terms") {
  std::mt19937_64 rng(53);
  const int n = 5;
  auto r = fixtures::identity(n) + 0.05 * fixtures::random(n, rng);
  REQUIRE(min_eigenvalue(r.matrix()) > 0);
  for (int p = 1; p <= n - 1; ++p)
    CHECK(min_eigenvalue(curvature_term(r, cached_space(RepKind::Exterior, n, p)).mat) > 0);
  for (int p = 1; p <= 4; ++p)
    CHECK(min_eigenvalue(curvature_term(r, cached_space(RepKind::TracelessSymmetric, n, p)).mat) > 0);
}

TEST_CASE("block structure of full symmetric powers") {
  std::mt19937_64 rng(59);
  const auto r = fixtures::random(4, rng);
  const auto two = block_structure(r, 2);
  REQUIRE(two.blocks.size() == 2);
  CHECK(two.blocks[0].block.dim() == 9);
  CHECK(two.blocks[1].block.dim() == 1);
  CHECK(std::abs(two.blocks[1].block.mat(0, 0)) <= 1e-12);

  const auto three = block_structure(r, 3);
  REQUIRE(three.blocks.size() == 2);
  CHECK(three.blocks[0].block.dim() == 16);
  CHECK(three.blocks[1].block.dim() == 4);
  CHECK(spectral_distance(three.blocks[1].block.mat, ricci(r)) <= 1e-10);

  // direct-sum rule: the spectrum of K(R, Sym^p) is the union of block spectra
  const Vector full = eigenvalues(curvature_term(r, cached_space(RepKind::Symmetric, 4, 3)).mat);
  Vector joined(20);
  joined << eigenvalues(three.blocks[0].block.mat), eigenvalues(three.blocks[1].block.mat);
  std::sort(joined.data(), joined.data() + joined.size());
  CHECK((full - joined).cwiseAbs().maxCoeff() <= 1e-10);

  const auto id = block_structure(fixtures::identity(5), 4);
  REQUIRE(id.blocks.size() == 3);
  CHECK(min_eigenvalue(id.blocks[0].block.mat) > 0);
  CHECK(min_eigenvalue(id.blocks[1].block.mat) > 0);
  CHECK(std::abs(id.blocks[2].block.mat(0, 0)) <= 1e-12);
}

TEST_CASE("Berger's diagonal values") {
  for (const auto& pair : berger_diagonal(fixtures::identity(4))) {
    CHECK(std::abs(pair.eigenvalue - 3) <= 1e-12);
    CHECK(std::abs(pair.form_value - 12) <= 1e-10);
  }
  for (const auto& pair : berger_diagonal(fixtures::s2xs2())) {
    CHECK(std::abs(pair.eigenvalue - 1) <= 1e-12);
    CHECK(std::abs(pair.form_value - 4) <= 1e-10);
  }
  std::mt19937_64 rng(61);
  const auto r = fixtures::random(6, rng);
  const Vector ev = eigenvalues(ricci(r));
  const auto pairs = berger_diagonal(r);
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    CHECK(std::abs(pairs[m].eigenvalue - ev(m)) <= 1e-10);
    CHECK(std::abs(pairs[m].form_value - 4 * ev(m)) <= 1e-8);
  }
}
