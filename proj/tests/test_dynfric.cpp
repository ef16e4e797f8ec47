#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "expfam/dynfric.hpp"
#include "expfam/errors.hpp"
#include "expfam/family.hpp"
#include "expfam/oracle.hpp"
#include "support.hpp"

using namespace expfam;
using expfam::test::rel_err;

TEST_CASE("family orders") {
  CHECK(h_order({2.5, HFamily::H1}) == 1.0);
  CHECK(h_order({3.0, HFamily::H2}) == 0.5);
  CHECK(h_order({3.0, HFamily::Custom, 0.2}) == 0.2);
  CHECK(h_scale(4.0) == 0.75);
  CHECK_THROWS_AS(h_scale(1.0), DomainError);
  CHECK(to_string(HFamily::H2) == "H2");
}

TEST_CASE("values") {
  CHECK(h_eval({2.5, HFamily::H1, 0, 0.0}) == 0.0);
  CHECK(h_eval({3.0, HFamily::H2, 0, 0.0}) == 0.0);
  CHECK(rel_err(h_eval({2.5, HFamily::H1, 0, 1.0}), 0.48528286263288115188) < 1e-13);
  CHECK(rel_err(h_eval({3.0, HFamily::H2, 0, 2.0}), 1.2835019312313088477) < 1e-13);
}

TEST_CASE("existence gates agree with the domain check") {
  for (double a = 0.5; a < 4.0; a += 0.125) {
    for (HFamily f : {HFamily::H1, HFamily::H2}) {
      const HSpec spec{a, f, 0, 1.0};
      const double nu = a - (f == HFamily::H1 ? 1.5 : 2.5);
      const bool exists = a > 1 && check_domain({2, 2, nu}).admissible;
      INFO("a=" << a << " " << to_string(f));
      CHECK(exists == (f == HFamily::H1 ? a > 1 : a > 2));
      if (exists) {
        CHECK_NOTHROW(require_existence(spec));
      } else {
        CHECK_THROWS_AS(h_eval(spec), ExistenceError);
      }
    }
  }
  try {
    h_eval({1.5, HFamily::H2, 0, 1.0});
    FAIL("accepted");
  } catch (const ExistenceError& e) {
    CHECK(std::string(e.what()).find("requires a > 2") != std::string::npos);
  }
}

TEST_CASE("agreement with the two-dimensional oracle and the reduced path") {
  struct Case {
    double a;
    HFamily f;
  };
  for (const Case c : {Case{1.2, HFamily::H1}, Case{2.5, HFamily::H1}, Case{4, HFamily::H1},
                       Case{2.2, HFamily::H2}, Case{3, HFamily::H2}, Case{5, HFamily::H2}}) {
    for (double y : {0.3, 1.0, 3.0}) {
      const HSpec spec{c.a, c.f, 0, y};
      const auto h = h_evaluate(spec);
      INFO("a=" << c.a << " " << to_string(c.f) << " y=" << y);
      CHECK(rel_err(h.reduced_value, h.value) <= 1e-12);
      CHECK(rel_err(oracle_H(c.a, h_order(spec), y).value, h.value) <= 1e-6);
    }
  }
}

TEST_CASE("monotone growth and saturation") {
  for (HSpec spec : {HSpec{2.5, HFamily::H1}, HSpec{3.0, HFamily::H2}, HSpec{1.2, HFamily::H1}}) {
    double prev = 0.0;
    for (double y = 0.05; y < 6.0; y += 0.05) {
      spec.y = y;
      const double h = h_eval(spec);
      CHECK(h > prev);
      prev = h;
    }
  }
  const double h8 = h_eval({2.5, HFamily::H1, 0, 8.0});
  const double h16 = h_eval({2.5, HFamily::H1, 0, 16.0});
  CHECK(rel_err(h8, h16) < 1e-8);
}

TEST_CASE("error function through the lower gamma function") {
  CHECK(erf_from_gamma(0.0) == 0.0);
  CHECK(erf_from_gamma(std::numeric_limits<double>::infinity()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(erf_from_gamma(1.0) - oracle_erf(1.0).value) <= 1e-12);
  for (double z : {0.01, 0.3, 2.0, 9.0}) CHECK(rel_err(erf_from_gamma(z), std::erf(std::sqrt(z))) < 1e-14);
  CHECK_THROWS_AS(erf_from_gamma(-1.0), DomainError);
}
