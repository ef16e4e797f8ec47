#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "expfam/quadrature.hpp"
#include "support.hpp"

using namespace expfam;
using expfam::test::rel_err;

TEST_CASE("15-point Kronrod rule is exact through degree 22") {
  for (int n = 0; n <= 22; ++n) {
    auto f = [n](double x) { return std::pow(x, n); };
    const double exact = (std::pow(2.0, n + 1) - std::pow(-0.5, n + 1)) / (n + 1);
    INFO("degree " << n);
    CHECK(std::abs(quad::gauss_kronrod_15(f, -0.5, 2.0).value - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("adaptive Gauss-Kronrod") {
  auto f = [](double x) { return std::sqrt(x) * std::exp(-x); };
  // int_0^1 sqrt(x) e^-x dx = gamma(3/2, 1)
  const auto e = quad::adaptive_gauss_kronrod(f, 0.0, 1.0, 1e-12, 50);
  CHECK(e.converged);
  CHECK(rel_err(e.value, 0.37894469164098470380) < 1e-12);
  CHECK(e.error <= 1e-12 * std::abs(e.value));
  CHECK(e.panels > 1);

  const auto osc = quad::adaptive_gauss_kronrod([](double x) { return std::cos(30.0 * x); }, 0.0, 3.0, 1e-12, 40);
  CHECK(osc.converged);
  CHECK(std::abs(osc.value - std::sin(90.0) / 30.0) < 1e-13);
}

TEST_CASE("unreachable tolerance is reported as non-convergence") {
  auto f = [](double x) { return std::exp(x); };
  const auto e = quad::adaptive_gauss_kronrod(f, 0.0, 1.0, 1e-18, 40);
  CHECK_FALSE(e.converged);
  CHECK(rel_err(e.value, std::expm1(1.0)) < 1e-14);
  CHECK(e.error > 0.0);
}

TEST_CASE("depth cap stops refinement") {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const auto e = quad::adaptive_gauss_kronrod(f, 0.0, 1.0, 1e-14, 10);
  CHECK_FALSE(e.converged);
  CHECK(rel_err(e.value, 2.0) < 1e-2);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  // int_0^1 x^-0.9 dx = 10, evaluated from the distance to the left end.
  const auto e = quad::tanh_sinh([](double d) { return std::pow(d, -0.9); }, 0.0, 1.0, 1e-10);
  CHECK(e.converged);
  CHECK(rel_err(e.value, 10.0) < 1e-9);

  // log singularity at both ends: int_0^1 ln(x) ln(1-x) dx = 2 - pi^2/6
  const auto both = quad::tanh_sinh(
      [](double d) { return std::log(d) * std::log1p(-d); }, 0.0, 1.0, 1e-12);
  CHECK(both.converged);
  CHECK(rel_err(both.value, 2.0 - M_PI * M_PI / 6.0) < 1e-11);
}

TEST_CASE("tanh-sinh stops at the noise floor") {
  const auto e = quad::tanh_sinh([](double d) { return std::exp(-d); }, 0.0, 2.0, 1e-18);
  CHECK_FALSE(e.converged);
  CHECK(rel_err(e.value, -std::expm1(-2.0)) < 1e-14);
}
