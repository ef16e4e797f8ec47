#include "expfam/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "expfam/errors.hpp"
#include "expfam/special.hpp"

namespace expfam {

namespace {

// e^-700 is ~1e-304: past this the boundary term cannot affect the sum.
constexpr double kFlushArgument = 700.0;

void require_positive_z(double z, const char* who) {
  if (!(z > 0.0)) {
    throw DomainError(std::string(who) + ": requires z > 0, got z=" + std::to_string(z));
  }
}

ParamTriple shifted(const ParamTriple& p) { return {p.lambda + p.mu, p.mu, p.nu - 1.0}; }

double denominator(const ParamTriple& p) { return 1.0 + p.lambda + p.mu * (p.nu - 1.0); }

}  // namespace

DomainVerdict check_domain(const ParamTriple& p) {
  if (!std::isfinite(p.lambda) || !std::isfinite(p.nu) || !std::isfinite(p.mu)) {
    throw DomainError("check_domain: parameters must be finite");
  }
  if (!(p.mu > 0.0)) {
    throw DomainError("check_domain: requires mu > 0, got mu=" + std::to_string(p.mu));
  }
  DomainVerdict v;
  v.binding_bound = std::max(-1.0, -1.0 - p.mu * (p.nu - 1.0));
  v.branch = p.nu >= 1.0 ? Branch::NuGe1 : Branch::NuLe1;
  v.admissible = p.lambda > v.binding_bound;
  return v;
}

void require_admissible(const ParamTriple& p) {
  const DomainVerdict v = check_domain(p);
  if (!v.admissible) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "inadmissible parameters (lambda=" << p.lambda << ", mu=" << p.mu
        << ", nu=" << p.nu << "): existence requires lambda > " << v.binding_bound;
    throw InadmissibleError(msg.str(), v.binding_bound);
  }
  // Both follow from the strict inequality above.
  if (!(denominator(p) > 0.0) || !((1.0 + p.lambda) / p.mu > 0.0)) {
    throw std::logic_error("admissible triple with nonpositive denominator");
  }
}

ClosedFormResult closed_form(const ParamTriple& p, double z) {
  require_admissible(p);
  if (!(z >= 0.0)) {
    throw DomainError("closed_form: requires z >= 0, got z=" + std::to_string(z));
  }
  ClosedFormResult r;
  r.denominator = denominator(p);
  if (z == 0.0) return r;

  const double u = std::pow(z, p.mu);
  r.gamma_term = gamma_lower((1.0 + p.lambda) / p.mu, u);
  if (u > kFlushArgument) {
    r.boundary_flushed = true;
  } else {
    r.boundary_term = std::pow(z, 1.0 + p.lambda) * expint(p.nu, u);
  }
  r.value = (r.gamma_term + r.boundary_term) / r.denominator;
  return r;
}

ParamTriple transform_scaling(const ParamTriple& p, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("transform_scaling: requires r > 0, got r=" + std::to_string(r));
  }
  const ParamTriple q{(p.lambda - r + 1.0) / r, p.mu / r, p.nu};
  if (check_domain(p).admissible && !check_domain(q).admissible) {
    throw std::logic_error("transform_scaling: admissibility not preserved");
  }
  return q;
}

double reduce_by_parts(const ParamTriple& p, double z) {
  require_admissible(p);
  require_positive_z(z, "reduce_by_parts");
  const ParamTriple q = shifted(p);
  require_admissible(q);
  const double boundary = std::pow(z, p.lambda + 1.0) * expint(p.nu, std::pow(z, p.mu));
  return (boundary + p.mu * closed_form(q, z).value) / (p.lambda + 1.0);
}

double ladder_identity_residual(const ParamTriple& p, double z) {
  require_admissible(p);
  require_positive_z(z, "ladder_identity_residual");
  const ParamTriple q = shifted(p);
  require_admissible(q);
  const double t_shifted = p.mu * closed_form(q, z).value;
  const double t_gamma = gamma_lower((1.0 + p.lambda) / p.mu, std::pow(z, p.mu));
  const double t_self = p.mu * (p.nu - 1.0) * closed_form(p, z).value;
  const double scale = std::max({std::abs(t_shifted), std::abs(t_gamma), std::abs(t_self)});
  return (t_shifted - t_gamma + t_self) / scale;
}

double reduced_form(const ParamTriple& p, double z) {
  require_admissible(p);
  if (!(p.lambda > p.mu - 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reduced_form: requires lambda > mu - 1 = " << p.mu - 1.0
        << ", got lambda=" << p.lambda;
    throw SideConditionError(msg.str());
  }
  require_positive_z(z, "reduced_form");
  const double u = std::pow(z, p.mu);
  const double s = (1.0 + p.lambda - p.mu) / p.mu;
  const double gamma_part = s * gamma_lower(s, u);
  const double expint_part = p.nu * std::pow(z, 1.0 + p.lambda - p.mu) * expint(p.nu + 1.0, u);
  return (gamma_part - expint_part) / denominator(p);
}

double small_z_leading(const ParamTriple& p, double z) {
  require_admissible(p);
  require_positive_z(z, "small_z_leading");
  const double l1 = p.lambda + 1.0;
  if (p.nu > 1.0) return std::pow(z, l1) / (l1 * (p.nu - 1.0));
  if (p.nu == 1.0) return -(p.mu / l1) * std::pow(z, l1) * std::log(z);
  const double d = denominator(p);
  return gamma_complete(1.0 - p.nu) * std::pow(z, d) / d;
}

std::vector<std::pair<double, double>> region_boundary(double nu, std::span<const double> mu_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(mu_grid.size());
  for (const double mu : mu_grid) {
    out.emplace_back(mu, check_domain({0.0, mu, nu}).binding_bound);
  }
  return out;
}

}  // namespace expfam
