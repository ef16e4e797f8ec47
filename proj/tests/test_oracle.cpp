#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "expfam/errors.hpp"
#include "expfam/oracle.hpp"
#include "expfam/special.hpp"
#include "support.hpp"

using namespace expfam;
using expfam::test::rel_err;

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate(QuadratureSpec{}));
  CHECK_THROWS_AS(validate(QuadratureSpec{0.0}), DomainError);
  CHECK_THROWS_AS(validate(QuadratureSpec{1e-3}), DomainError);
  QuadratureSpec shallow;
  shallow.max_depth = 9;
  CHECK_THROWS_AS(validate(shallow), DomainError);
  QuadratureSpec wide;
  wide.split_point = 3.0;
  CHECK_THROWS_AS(oracle_I({2, 2, 1}, 1.5, wide), DomainError);
}

TEST_CASE("self-test against an elementary collapse") {
  // x^0.5 E0(x) = x^-0.5 e^-x
  const auto r = oracle_I({0.5, 1, 0}, 1.0);
  CHECK(r.converged);
  CHECK(rel_err(r.value, 1.4936482656248540367) < 1e-10);
  CHECK(r.err_estimate >= 0.0);
  CHECK(r.err_estimate <= 1e-10 * r.value);
}

TEST_CASE("reference values") {
  const auto a = oracle_I({2, 2, 1}, 1.5);
  CHECK(rel_err(a.value, 0.27180385118674335704) < 1e-10);
  const auto b = oracle_I({2, 2, 1.5}, 0.9);
  CHECK(rel_err(b.value, 0.12052965115700925995) < 1e-10);
  const auto c = oracle_I({-0.4, 1, 0.5}, 2.0);
  CHECK(c.converged);
  CHECK(c.err_estimate <= 1e-10 * c.value);
  CHECK(rel_err(c.value, 14.863148530794433482) < 1e-10);
  CHECK(c.singular_segment_value > 0.0);
  CHECK(c.panels_used > 0);
}

TEST_CASE("domain errors") {
  // On the existence boundary: lambda = -1 - mu (nu - 1) = -0.5.
  try {
    oracle_I({-0.5, 1, 0.5}, 2.0);
    FAIL("boundary triple accepted");
  } catch (const InadmissibleError& e) {
    CHECK(e.bound() == -0.5);
  }
  CHECK_THROWS_AS(oracle_I({2, 2, -0.5}, 1.0), InadmissibleError);
  CHECK_THROWS_AS(oracle_I({2, 2, 1}, 0.0), DomainError);
  CHECK_THROWS_AS(oracle_I({2, 0, 1}, 1.0), DomainError);
}

TEST_CASE("boundary triple diverges logarithmically") {
  // Near 0 the integrand behaves as sqrt(pi) / x - 2 / sqrt(x), so every
  // decade of the lower limit adds about sqrt(pi) ln 10.
  const ParamTriple p{-0.5, 1, 0.5};
  double prev = oracle_I_from(p, 1e-4, 2.0).value;
  for (double lower : {1e-6, 1e-8, 1e-10, 1e-12}) {
    const double v = oracle_I_from(p, lower, 2.0).value;
    CHECK(v > prev);
    CHECK(rel_err((v - prev) / (2.0 * std::log(10.0)), kSqrtPi) < 1e-2);
    prev = v;
  }
  CHECK_THROWS_AS(oracle_I_from(p, 0.0, 2.0), DomainError);
}

TEST_CASE("halving the tolerance stays within the error estimate") {
  for (const ParamTriple& p : {ParamTriple{-0.4, 1, 0.5}, ParamTriple{2, 2, 1},
                               ParamTriple{0.5, 0.5, 3}, ParamTriple{1, 3, 0.5}}) {
    for (double z : {0.1, 2.5, 8.0}) {
      const auto coarse = oracle_I(p, z, QuadratureSpec{1e-8});
      const auto fine = oracle_I(p, z, QuadratureSpec{5e-9});
      INFO("lambda=" << p.lambda << " mu=" << p.mu << " nu=" << p.nu << " z=" << z);
      CHECK(std::abs(fine.value - coarse.value) <= coarse.err_estimate);
    }
  }
}

TEST_CASE("substitution invariance") {
  for (const ParamTriple& p : {ParamTriple{0, 2, 1}, ParamTriple{1, 0.5, 1.5},
                               ParamTriple{2, 3, 3}, ParamTriple{0.5, 1, 1}}) {
    for (double z : {0.1, 0.9, 2.5}) {
      QuadratureSpec direct;
      direct.linearize = false;
      const auto u = oracle_I(p, z);
      const auto x = oracle_I(p, z, direct);
      INFO("lambda=" << p.lambda << " mu=" << p.mu << " nu=" << p.nu << " z=" << z);
      CHECK(x.converged);
      CHECK(std::abs(u.value - x.value) <= u.err_estimate + x.err_estimate);
    }
  }
}

TEST_CASE("two-dimensional oracle") {
  CHECK(rel_err(oracle_H(2.5, 1.0, 1.0).value, 0.48528286263288115188) < 1e-8);
  CHECK(rel_err(oracle_H(3.0, 0.5, 2.0).value, 1.2835019312313088477) < 1e-8);
  CHECK(oracle_H(2.5, 1.0, 0.0).value == 0.0);
  CHECK_THROWS_AS(oracle_H(1.5, -1.0, 1.0), ExistenceError);
  CHECK_THROWS_AS(oracle_H(3.0, -0.5, 1.0), ExistenceError);
  CHECK_THROWS_AS(oracle_H(1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(oracle_H(2.0, 1.0, -1.0), DomainError);

  const double h8 = oracle_H(3.0, 0.5, 8.0).value;
  const double h12 = oracle_H(3.0, 0.5, 12.0).value;
  CHECK(rel_err(h8, h12) <= 1e-6);
}

TEST_CASE("error function by quadrature") {
  const auto e = oracle_erf(1.0);
  CHECK(e.converged);
  CHECK(rel_err(e.value, 0.84270079294971486934) < 1e-13);
  CHECK(oracle_erf(0.0).value == 0.0);
}
