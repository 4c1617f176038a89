#include "doctest.h"

#include "curvelab/curvature.hpp"
#include "curvelab/multilinear.hpp"

#include <cmath>

using namespace curvelab;

namespace {

Real ricci_norm(const CurvatureOperator& r) { return ricci(r).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Ricci tensor of fixtures") {
  const auto id = fixtures::identity(4);
  CHECK(max_abs_diff(ricci(id), 3 * Matrix::Identity(4, 4)) == 0);
  CHECK(scalar_curvature(id) == 12);
  CHECK(ricci_norm(fixtures::hodge_star()) == 0);
  CHECK(max_abs_diff(ricci(fixtures::s2xs2()), Matrix::Identity(4, 4)) == 0);
}

TEST_CASE("entry is antisymmetric in each pair") {
  std::mt19937_64 rng(7);
  const auto r = fixtures::random(5, rng);
  CHECK(r.entry(0, 2, 1, 4) == r(pair_index(5, 0, 2), pair_index(5, 1, 4)));
  CHECK(r.entry(2, 0, 1, 4) == -r.entry(0, 2, 1, 4));
  CHECK(r.entry(2, 0, 4, 1) == r.entry(0, 2, 1, 4));
  CHECK(r.entry(3, 3, 1, 2) == 0);
}

TEST_CASE("ingestion symmetrizes and records the defect") {
  Matrix m = Matrix::Identity(6, 6);
  m(0, 1) = 0.5;
  const CurvatureOperator r(4, m);
  CHECK(r(0, 1) == 0.25);
  CHECK(r(1, 0) == 0.25);
  CHECK(r.asymmetry() == 0.5);
  CHECK_THROWS_AS(CurvatureOperator(4, Matrix::Identity(5, 5)), std::invalid_argument);
}

TEST_CASE("decomposition of the fixtures") {
  SUBCASE("identity") {
    const auto d = decompose(fixtures::identity(4));
    CHECK(max_abs_diff(d.r_u.matrix(), Matrix::Identity(6, 6)) <= 1e-15);
    CHECK(d.r_l.matrix().cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(d.r_w.matrix().cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(d.r_w4.matrix().cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("Hodge star") {
    const auto star = fixtures::hodge_star();
    const auto d = decompose(star);
    CHECK(max_abs_diff(d.r_w4.matrix(), star.matrix()) <= 1e-15);
    CHECK(d.r_u.matrix().cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(d.r_l.matrix().cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(d.r_w.matrix().cwiseAbs().maxCoeff() <= 1e-15);
    // blocks (12)↔(34) +1, (13)↔(24) −1, (14)↔(23) +1
    CHECK(star(pair_index(4, 0, 1), pair_index(4, 2, 3)) == 1);
    CHECK(star(pair_index(4, 0, 2), pair_index(4, 1, 3)) == -1);
    CHECK(star(pair_index(4, 0, 3), pair_index(4, 1, 2)) == 1);
    CHECK(max_abs_diff(star.matrix() * star.matrix(), Matrix::Identity(6, 6)) == 0);
  }
  SUBCASE("Weyl element") {
    for (int n : {4, 5, 6}) {
      const auto rw = fixtures::r_w(n);
      const auto d = decompose(rw);
      CHECK(max_abs_diff(d.r_w.matrix(), rw.matrix()) <= 1e-15);
      CHECK(d.r_u.matrix().cwiseAbs().maxCoeff() <= 1e-15);
      CHECK(d.r_l.matrix().cwiseAbs().maxCoeff() <= 1e-15);
      CHECK(d.r_w4.matrix().cwiseAbs().maxCoeff() <= 1e-15);
    }
  }
  SUBCASE("traceless Ricci element") {
    const int n = 4;
    const auto rl = fixtures::r_l(n);
    // diag(1,0,0,-1)⊘g = Σ_{j=2,3} E_1j⊗E_1j − Σ_{i=2,3} E_i4⊗E_i4
    Matrix expected = Matrix::Zero(6, 6);
    expected(pair_index(n, 0, 1), pair_index(n, 0, 1)) = 1;
    expected(pair_index(n, 0, 2), pair_index(n, 0, 2)) = 1;
    expected(pair_index(n, 1, 3), pair_index(n, 1, 3)) = -1;
    expected(pair_index(n, 2, 3), pair_index(n, 2, 3)) = -1;
    CHECK(max_abs_diff(rl.matrix(), expected) <= 1e-15);
    const auto d = decompose(rl);
    CHECK(max_abs_diff(d.r_l.matrix(), rl.matrix()) <= 1e-15);
    CHECK(d.r_w.matrix().cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("decomposition invariants on random operators") {
  std::mt19937_64 rng(11);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto r = fixtures::random(n, rng);
      const auto d = decompose(r);
      CHECK(d.reconstruction_residual(r) <= 1e-10);
      CHECK(d.orthogonality_residual() <= 1e-10);
      CHECK(std::abs(scalar_curvature(d.r_l)) <= 1e-10);
      CHECK(ricci_norm(d.r_w) <= 1e-10);
      CHECK(ricci_norm(d.r_w4) <= 1e-10);
      CHECK(wedge4_projection(d.r_w).matrix().cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(wedge4_projection(d.r_u).matrix().cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(wedge4_projection(d.r_l).matrix().cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(max_abs_diff(ricci(d.r_u + d.r_l), ricci(r)) <= 1e-10);
    }
  }
}

TEST_CASE("decomposition is equivariant") {
  std::mt19937_64 rng(5);
  for (int n : {4, 5, 6}) {
    const auto r = fixtures::random(n, rng);
    const Matrix q = random_orthogonal(n, rng);
    const auto a = decompose(transform(r, q));
    const auto b = decompose(r);
    CHECK(max_abs_diff(a.r_u.matrix(), transform(b.r_u, q).matrix()) <= 1e-9);
    CHECK(max_abs_diff(a.r_l.matrix(), transform(b.r_l, q).matrix()) <= 1e-9);
    CHECK(max_abs_diff(a.r_w.matrix(), transform(b.r_w, q).matrix()) <= 1e-9);
    CHECK(max_abs_diff(a.r_w4.matrix(), transform(b.r_w4, q).matrix()) <= 1e-9);
  }
}

TEST_CASE("dimension three is reduced") {
  std::mt19937_64 rng(3);
  const auto r = fixtures::random(3, rng);
  const auto d = decompose(r);
  CHECK(d.reduced);
  CHECK(d.r_w.matrix().cwiseAbs().maxCoeff() == 0);
  CHECK(d.reconstruction_residual(r) <= 1e-12);
  CHECK_THROWS_AS(decompose(fixtures::identity(2)), std::invalid_argument);
}

TEST_CASE("sectional curvature") {
  std::mt19937_64 rng(19);
  const Vector x = Vector::Random(4);
  const Vector y = Vector::Random(4);
  const auto sigma = TwoPlane::orthonormalized(x, y);
  CHECK(static_cast<double>(sec(fixtures::identity(4), sigma)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(sec(fixtures::hodge_star(), sigma)) <= 1e-15);
  CHECK(sec(fixtures::s2xs2(), TwoPlane::coordinate(4, 0, 2)) == 0);
  CHECK(sec(fixtures::s2xs2(), TwoPlane::coordinate(4, 0, 1)) == 1);

  const Vector e0 = Vector::Unit(4, 0);
  CHECK_THROWS_AS(TwoPlane::make(e0, e0), std::invalid_argument);
  CHECK_THROWS_AS(TwoPlane::make(e0, 2 * Vector::Unit(4, 1)), std::invalid_argument);

  for (int n : {4, 5, 6}) {
    const auto r = fixtures::random(n, rng);
    const auto omega = 0.7 * fixtures::wedge4_element(n, 0, 1, 2, 3) - 1.3 * wedge4_projection(fixtures::random(n, rng));
    for (int k = 0; k < 5; ++k) {
      const auto s = TwoPlane::orthonormalized(Vector::Random(n), Vector::Random(n));
      CHECK(std::abs(sec(r, s) - sec(r + omega, s)) <= 1e-12);
    }
  }
}

TEST_CASE("fixtures by name") {
  CHECK(fixtures::is_fixture_name("RW4"));
  CHECK_FALSE(fixtures::is_fixture_name("weyl"));
  CHECK(max_abs_diff(fixtures::by_name("RW4", 4).matrix(), fixtures::hodge_star().matrix()) == 0);
  CHECK_THROWS(fixtures::by_name("s2xs2", 5));
  CHECK_THROWS(fixtures::by_name("nope", 4));
}
