#include "doctest.h"

#include "curvelab/spherical.hpp"
#include "curvelab/weitzenbock.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace curvelab;

namespace {

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

Polynomial random_polynomial(int n, int max_degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Polynomial out(n);
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& m : monomial_basis(n, d))
      if (u(rng) > 0.3) out.add_term(m, u(rng));
  return out;
}

Real kform(const CurvatureOperator& r, int p, const Polynomial& phi, const Polynomial& psi) {
  const auto space = cached_space(RepKind::TracelessSymmetric, r.n(), p);
  return bilinear_form(curvature_term(r, space), space->coordinates(phi), space->coordinates(psi));
}

}  // namespace

TEST_CASE("monomial integrals") {
  CHECK(integrate_monomial(mi({0, 0, 0})) == doctest::Approx(4 * M_PI).epsilon(1e-15));
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> e(n, 0);
    e[0] = 2;
    CHECK(integrate_monomial(mi(e)) == doctest::Approx(double(sphere_area(n) / n)).epsilon(1e-14));
  }
  const Real expected = M_PI * M_PI / 12;
  CHECK(std::abs(integrate_monomial(mi({2, 2, 0, 0})) - expected) <= 1e-15);
  CHECK(integrate_monomial(mi({1, 2, 0, 0})) == 0);
}

TEST_CASE("x1²x2² on S³ against Monte Carlo") {
  const auto mc = oracle::mc_integrate(Polynomial::monomial(mi({2, 2, 0, 0})), 10000000, 5);
  CHECK(std::abs(mc.mean / (M_PI * M_PI / 12) - 1) <= 1e-2);
}

TEST_CASE("exact integration agrees with Monte Carlo on random polynomials") {
  std::mt19937_64 rng(17);
  for (int n : {3, 4}) {
    const auto phi = random_polynomial(n, 8, rng);
    const auto mc = oracle::mc_integrate(phi, 1000000, 19 + n);
    CHECK(std::abs(integrate(phi) - mc.mean) <= 3 * mc.standard_error);
  }
}

TEST_CASE("c for p = 1 is n / area") {
  for (int n = 2; n <= 8; ++n)
    CHECK(c_constant(n, 1) == doctest::Approx(double(n / sphere_area(n))).epsilon(1e-13));
}

TEST_CASE("c does not depend on the harmonic polynomial") {
  auto x1 = Polynomial::variable(4, 0);
  const Real a = c_constant_for(real_power_polynomial(4, 3));
  const Real b = c_constant_for(harmonic_projection(x1.power(3)));
  CHECK(std::abs(a / b - 1) <= 1e-8);
  const auto check = c_constant_checked(5, 4, 4, 3);
  CHECK(check.relative_spread <= 1e-8);
  CHECK_THROWS(c_constant_for(Polynomial(4)));
}

TEST_CASE("c is positive") {
  for (int n = 2; n <= 8; ++n)
    for (int p = 1; p <= 6; ++p) CHECK(c_constant(n, p) > 0);
}

TEST_CASE("integral formula at R = Id, φ = ψ = φ_2") {
  const int n = 4;
  const auto id = fixtures::identity(n);
  const auto phi = real_power_polynomial(n, 2);
  const Real lhs = kform(id, 2, phi, phi);
  const Real rhs = c_constant(n, 2) * integrate(integral_form_integrand(id, phi, phi));
  CHECK(lhs == doctest::Approx(8.0 * n).epsilon(1e-12));
  CHECK(std::abs(rhs / lhs - 1) <= 1e-8);
}

TEST_CASE("integral formula vanishes on the Hodge star") {
  std::mt19937_64 rng(23);
  const auto star = fixtures::hodge_star();
  for (int p = 2; p <= 4; ++p) {
    const auto phi = random_harmonic(4, p, rng);
    const auto psi = random_harmonic(4, p, rng);
    CHECK(std::abs(kform(star, p, phi, psi)) <= 1e-10);
    CHECK(std::abs(integrate(integral_form_integrand(star, phi, psi))) <= 1e-10);
  }
}

TEST_CASE("odd total degree integrates to zero") {
  std::mt19937_64 rng(29);
  const auto r = fixtures::random(4, rng);
  const auto phi = random_harmonic(4, 3, rng);
  const auto psi = random_harmonic(4, 2, rng);
  CHECK(std::abs(integrate(integral_form_integrand(r, phi, psi))) <= 1e-12);
}

TEST_CASE("integral form is symmetric and bilinear") {
  std::mt19937_64 rng(31);
  const auto r = fixtures::random(4, rng);
  const auto a = random_harmonic(4, 3, rng);
  const auto b = random_harmonic(4, 3, rng);
  const auto c = random_harmonic(4, 3, rng);
  auto form = [&](const Polynomial& x, const Polynomial& y) {
    return integrate(integral_form_integrand(r, x, y));
  };
  CHECK(std::abs(form(a, b) - form(b, a)) <= 1e-10);
  CHECK(std::abs(form(2 * a + c, b) - 2 * form(a, b) - form(c, b)) <= 1e-10);
}

TEST_CASE("different harmonic slots of Sym^p are orthogonal for the integral form") {
  std::mt19937_64 rng(37);
  const int n = 4;
  const auto r = fixtures::random(n, rng);
  const auto r2 = Polynomial::r_squared(n);
  const auto h4 = random_harmonic(n, 4, rng);
  const auto h2 = random_harmonic(n, 2, rng);
  const auto h0 = Polynomial::constant(n, 1);
  const Polynomial phi = h4;
  const Polynomial psi = r2 * h2;
  const Polynomial chi = r2.power(2) * h0;
  CHECK(std::abs(integrate(integral_form_integrand(r, phi, psi))) <= 1e-9);
  CHECK(std::abs(integrate(integral_form_integrand(r, phi, chi))) <= 1e-9);
  CHECK(std::abs(integrate(integral_form_integrand(r, psi, chi))) <= 1e-9);
}

TEST_CASE("verify_integral_formula on random operators") {
  std::mt19937_64 rng(41);
  for (int n : {3, 4}) {
    const auto r = fixtures::random(n, rng);
    const auto report = verify_integral_formula(r, 3, 5, 43);
    CHECK(report.pairs.size() == 5);
    CHECK(report.worst_relative() <= 1e-7);
    CHECK(report.c_spread <= 1e-8);
  }
}
