#ifndef EXPFAM_FAMILY_HPP
#define EXPFAM_FAMILY_HPP

// The integral family
//
//   I(lambda, mu, nu; z) = int_0^z x^lambda E_nu(x^mu) dx
//                        = [gamma((1+lambda)/mu, z^mu) + z^(1+lambda) E_nu(z^mu)]
//                          / (1 + lambda + mu (nu - 1)),
//
// which exists for mu > 0 and lambda > max{-1, -1 - mu (nu - 1)}.

#include <span>
#include <utility>
#include <vector>

#include "expfam/params.hpp"

namespace expfam {

/// Which of the two lower bounds on lambda is in force.
enum class Branch { NuGe1, NuLe1 };

struct DomainVerdict {
  bool admissible = false;
  /// max{-1, -1 - mu (nu - 1)}; lambda must exceed it strictly.
  double binding_bound = -1.0;
  Branch branch = Branch::NuGe1;
};

struct ClosedFormResult {
  double value = 0.0;
  /// gamma((1+lambda)/mu, z^mu)
  double gamma_term = 0.0;
  /// z^(1+lambda) E_nu(z^mu)
  double boundary_term = 0.0;
  /// 1 + lambda + mu (nu - 1), positive on the admissible region
  double denominator = 0.0;
  /// Set when z^mu is so large that the boundary term was flushed to zero;
  /// the value then equals gamma_term / denominator to double precision.
  bool boundary_flushed = false;
};

/// Throws DomainError for mu <= 0 or non-finite parameters.
DomainVerdict check_domain(const ParamTriple& p);

/// Throws InadmissibleError (carrying the bound) unless check_domain admits p.
void require_admissible(const ParamTriple& p);

/// Closed-form value of I. z = 0 gives 0 exactly.
ClosedFormResult closed_form(const ParamTriple& p, double z);

/// The substitution y = x^r:  I(p; z) = I(p'; z^r) / r with
/// p' = ((lambda - r + 1)/r, mu/r, nu). Throws DomainError for r <= 0.
ParamTriple transform_scaling(const ParamTriple& p, double r);

/// I from one integration by parts:
///   [z^(lambda+1) E_nu(z^mu) + mu I(lambda+mu, mu, nu-1; z)] / (lambda+1)
double reduce_by_parts(const ParamTriple& p, double z);

/// mu I(lambda+mu, mu, nu-1; z) - gamma((1+lambda)/mu, z^mu) + mu (nu-1) I(lambda, mu, nu; z),
/// divided by the largest magnitude among its three terms.
double ladder_identity_residual(const ParamTriple& p, double z);

/// One step of the gamma recursion applied to the closed form; valid for
/// lambda > mu - 1, else throws SideConditionError.
double reduced_form(const ParamTriple& p, double z);

/// Leading behaviour of I as z -> 0+ (three branches on nu).
double small_z_leading(const ParamTriple& p, double z);

/// (mu, lambda_min) pairs tracing the existence boundary for fixed nu.
std::vector<std::pair<double, double>> region_boundary(double nu, std::span<const double> mu_grid);

}  // namespace expfam

#endif  // EXPFAM_FAMILY_HPP
