#ifndef EXPFAM_SPECIAL_HPP
#define EXPFAM_SPECIAL_HPP

// Real-argument Gamma functions and the real-order exponential integral
//
//   gamma(a, x) = int_0^x t^(a-1) e^(-t) dt          (a > 0)
//   Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt        (any real a when x > 0)
//   E_nu(z)     = int_1^inf t^(-nu) e^(-z t) dt = z^(nu-1) Gamma(1-nu, z)
//
// Everything here is a pure function of its arguments. Domain violations are
// reported through the exceptions in errors.hpp.

#include <optional>

namespace expfam {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// Deepest downward recursion gamma_upper will perform for a <= 0 and x < 1.
inline constexpr int kMaxRecursionDepth = 64;

/// Complete Gamma function (Lanczos approximation, reflection for a < 1/2).
/// Throws PoleError at a = 0, -1, -2, ...
double gamma_complete(double a);

/// Gamma(1 + a) - 1, accurate for small |a| (no cancellation at a -> 0).
double gamma1pm1(double a);

/// Lower incomplete Gamma function. Requires a > 0 and x >= 0; x may be +inf.
double gamma_lower(double a, double x);

/// Upper incomplete Gamma function. Requires x > 0, or x == 0 with a > 0.
/// For a <= 0 the function is the extension defined by
/// Gamma(a, x) = (Gamma(a+1, x) - x^a e^(-x)) / a.
double gamma_upper(double a, double x);

/// gamma(a, x) + Gamma(a, x) - Gamma(a); should vanish to ~1e-13 Gamma(a).
double gamma_sum_check(double a, double x);

/// E_1(x), the classical exponential integral, for x > 0.
double expint_e1(double x);

/// Real-order exponential integral E_nu(z), z > 0.
double expint(double nu, double z);

/// dE_nu/dz = -E_(nu-1)(z).
double expint_derivative(double nu, double z);

/// Residuals of the two integration-by-parts identities
///   E_nu = (e^-z - z E_(nu-1)) / (nu - 1)
///   E_nu = (e^-z - nu E_(nu+1)) / z
/// `first` is empty when nu == 1.
struct RecurrenceResidual {
  std::optional<double> first;
  double second;
};
RecurrenceResidual expint_recurrence_residual(double nu, double z);

/// Leading term of E_nu(z) as z -> 0+.
double expint_leading_order(double nu, double z);

/// Residuals of gamma(a+1,x) = a gamma(a,x) - x^a e^-x and
/// Gamma(a+1,x) = a Gamma(a,x) + x^a e^-x, each scaled by the largest term.
struct GammaRecursionResidual {
  double lower;
  double upper;
};
GammaRecursionResidual gamma_recursion_residual(double a, double x);

}  // namespace expfam

#endif  // EXPFAM_SPECIAL_HPP
