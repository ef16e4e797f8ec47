#include "expfam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "expfam/errors.hpp"
#include "expfam/quadrature.hpp"
#include "expfam/special.hpp"

namespace expfam {

namespace {

// Beyond this the Gaussian tail of the inner integrand is below 1e-42.
constexpr double kInnerCutoff = 10.0;

// Lower bound on lambda for int_0 x^lambda E_nu(x^mu) dx to converge, read
// off the power of x the integrand behaves like near 0.
double convergence_bound(const ParamTriple& p) {
  if (p.nu >= 1.0) return -1.0;
  return -1.0 - p.mu * (p.nu - 1.0);
}

double default_split(const QuadratureSpec& spec, double upper) {
  if (spec.split_point > 0.0) {
    if (spec.split_point >= upper) {
      throw DomainError("oracle: split point " + std::to_string(spec.split_point) +
                        " must lie below the upper limit " + std::to_string(upper));
    }
    return spec.split_point;
  }
  return std::min(0.1, 0.5 * upper);
}

OracleResult head_and_tail(const quad::Integrand& g, double upper,
                           const QuadratureSpec& spec) {
  const double split = default_split(spec, upper);
  const quad::Estimate head = quad::tanh_sinh(g, 0.0, split, spec.rel_tol);
  const quad::Estimate tail =
      quad::adaptive_gauss_kronrod(g, split, upper, spec.rel_tol, spec.max_depth);
  OracleResult r;
  r.value = head.value + tail.value;
  r.err_estimate = head.error + tail.error;
  r.panels_used = tail.panels + 1;
  r.singular_segment_value = head.value;
  r.converged = head.converged && tail.converged;
  return r;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0 && spec.rel_tol < 1e-3)) {
    throw DomainError("quadrature: rel_tol must lie in (0, 1e-3)");
  }
  if (spec.max_depth < 10) {
    throw DomainError("quadrature: max_depth must be at least 10");
  }
}

OracleResult oracle_I(const ParamTriple& p, double z, const QuadratureSpec& spec) {
  validate(spec);
  if (!(p.mu > 0.0)) throw DomainError("oracle_I: requires mu > 0");
  if (!(z > 0.0)) throw DomainError("oracle_I: requires z > 0");
  const double bound = convergence_bound(p);
  if (!(p.lambda > bound)) {
    throw InadmissibleError("oracle_I: integral diverges at x = 0 unless lambda > " +
                                std::to_string(bound),
                            bound);
  }

  if (spec.linearize) {
    // x = u^(1/mu): int_0^(z^mu) u^(s-1) E_nu(u) du / mu with s = (1+lambda)/mu.
    const double s = (1.0 + p.lambda) / p.mu;
    const double inv_mu = 1.0 / p.mu;
    const double nu = p.nu;
    auto g = [=](double u) { return inv_mu * std::pow(u, s - 1.0) * expint(nu, u); };
    return head_and_tail(g, std::pow(z, p.mu), spec);
  }
  auto g = [p](double x) {
    const double u = std::pow(x, p.mu);
    // u underflowed: the abscissa is past resolution and tanh_sinh drops it
    if (u == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return std::pow(x, p.lambda) * expint(p.nu, u);
  };
  return head_and_tail(g, z, spec);
}

OracleResult oracle_I_from(const ParamTriple& p, double lower, double z,
                           const QuadratureSpec& spec) {
  validate(spec);
  if (!(p.mu > 0.0)) throw DomainError("oracle_I_from: requires mu > 0");
  if (!(lower > 0.0 && lower < z)) {
    throw DomainError("oracle_I_from: requires 0 < lower < z");
  }
  const double s = (1.0 + p.lambda) / p.mu;
  const double inv_mu = 1.0 / p.mu;
  const double nu = p.nu;
  auto g = [=](double u) { return inv_mu * std::pow(u, s - 1.0) * expint(nu, u); };
  const quad::Estimate e = quad::adaptive_gauss_kronrod(
      g, std::pow(lower, p.mu), std::pow(z, p.mu), spec.rel_tol, spec.max_depth);
  OracleResult r;
  r.value = e.value;
  r.err_estimate = e.error;
  r.panels_used = e.panels;
  r.converged = e.converged;
  return r;
}

OracleResult oracle_H(double a, double nu, double y, const QuadratureSpec& spec) {
  validate(spec);
  if (!(a > 1.0)) throw DomainError("oracle_H: requires a > 1");
  if (!(y >= 0.0)) throw DomainError("oracle_H: requires y >= 0");
  // After r = c/s the outer integrand behaves like s^(nu - 1/2) at s -> 0.
  if (!(nu > -0.5)) {
    throw ExistenceError("oracle_H: outer integral diverges for nu <= -1/2 (nu=" +
                         std::to_string(nu) + ")");
  }
  if (y == 0.0) return {0.0, 0.0, 0, 0.0, true};

  const double c = 1.0 - 1.0 / a;
  const double inner_tol = std::max(spec.rel_tol * 1e-2, 1e-13);

  // J(Y) = int_0^Y tau^2 e^(-tau^2) dtau, the inner integral after t = tau / sqrt(r).
  int inner_panels = 0;
  bool inner_ok = true;
  auto inner = [&](double upper) {
    const double top = std::min(upper, kInnerCutoff);
    const quad::Estimate e = quad::adaptive_gauss_kronrod(
        [](double t) { return t * t * std::exp(-t * t); }, 0.0, top, inner_tol,
        spec.max_depth);
    inner_panels += e.panels;
    inner_ok = inner_ok && e.converged;
    return e.value;
  };

  // r = c/s maps [c, inf) onto (0, 1]:
  //   int_c^inf r^(-nu-3/2) J(y sqrt r) dr = c^(-nu-1/2) int_0^1 s^(nu-1/2) J(y sqrt(c/s)) ds
  auto outer = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::pow(s, nu - 0.5) * inner(y * std::sqrt(c / s));
  };
  const quad::Estimate o = quad::tanh_sinh(outer, 0.0, 1.0, spec.rel_tol);

  const double prefactor = a * std::pow(c, a - nu - 0.5) * 4.0 / kSqrtPi;
  OracleResult r;
  r.value = prefactor * o.value;
  r.err_estimate = prefactor * o.error;
  r.panels_used = inner_panels;
  r.singular_segment_value = r.value;
  r.converged = o.converged && inner_ok;
  return r;
}

OracleResult oracle_erf(double x, const QuadratureSpec& spec) {
  validate(spec);
  if (!(x >= 0.0)) throw DomainError("oracle_erf: requires x >= 0");
  if (x == 0.0) return {0.0, 0.0, 0, 0.0, true};
  const quad::Estimate e = quad::adaptive_gauss_kronrod(
      [](double t) { return std::exp(-t * t); }, 0.0, x, spec.rel_tol, spec.max_depth);
  const double scale = 2.0 / kSqrtPi;
  return {scale * e.value, scale * e.error, e.panels, 0.0, e.converged};
}

}  // namespace expfam
