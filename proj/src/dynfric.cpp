#include "expfam/dynfric.hpp"

#include <cmath>
#include <string>

#include "expfam/errors.hpp"
#include "expfam/family.hpp"
#include "expfam/special.hpp"

namespace expfam {

namespace {

// Both H families reduce to I(2, 2, nu; .).
constexpr ParamTriple h_triple(double nu) { return {2.0, 2.0, nu}; }

// a c^(a-nu-1/2) 4/sqrt(pi), assembled in log space.
double prefactor(double a, double nu) {
  const double c = h_scale(a);
  return std::exp(std::log(a) + (a - nu - 0.5) * std::log(c) + std::log(4.0 / kSqrtPi));
}

}  // namespace

double h_order(const HSpec& spec) {
  switch (spec.family) {
    case HFamily::H1: return spec.a - 1.5;
    case HFamily::H2: return spec.a - 2.5;
    case HFamily::Custom: return spec.custom_nu;
  }
  return spec.custom_nu;
}

double h_scale(double a) {
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw ExistenceError("H: requires a > 1 (c = 1 - 1/a must lie in (0, 1)), got a=" +
                         std::to_string(a));
  }
  return 1.0 - 1.0 / a;
}

void require_existence(const HSpec& spec) {
  h_scale(spec.a);
  if (!(spec.y >= 0.0)) {
    throw DomainError("H: requires y >= 0, got y=" + std::to_string(spec.y));
  }
  const double nu = h_order(spec);
  if (check_domain(h_triple(nu)).admissible) return;
  switch (spec.family) {
    case HFamily::H1:
      throw ExistenceError("H1 requires a > 1 (nu = a - 3/2 > -1/2), got a=" +
                           std::to_string(spec.a));
    case HFamily::H2:
      throw ExistenceError("H2 requires a > 2 (nu = a - 5/2 > -1/2), got a=" +
                           std::to_string(spec.a));
    case HFamily::Custom:
      break;
  }
  throw ExistenceError("H requires nu > -1/2 for lambda = mu = 2, got nu=" + std::to_string(nu));
}

HEvaluation h_evaluate(const HSpec& spec) {
  require_existence(spec);
  if (spec.y == 0.0) return {};
  const double nu = h_order(spec);
  const double x = std::sqrt(h_scale(spec.a)) * spec.y;
  const double k = prefactor(spec.a, nu);
  return {k * closed_form(h_triple(nu), x).value, k * reduced_form(h_triple(nu), x)};
}

double h_eval(const HSpec& spec) { return h_evaluate(spec).value; }

double erf_from_gamma(double z) {
  if (!(z >= 0.0)) throw DomainError("erf_from_gamma: requires z >= 0");
  return gamma_lower(0.5, z) / kSqrtPi;
}

std::string to_string(HFamily family) {
  switch (family) {
    case HFamily::H1: return "H1";
    case HFamily::H2: return "H2";
    case HFamily::Custom: return "custom";
  }
  return "custom";
}

}  // namespace expfam
