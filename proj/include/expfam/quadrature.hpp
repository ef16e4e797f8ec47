#ifndef EXPFAM_QUADRATURE_HPP
#define EXPFAM_QUADRATURE_HPP

// One-dimensional rules used by the oracle: 7/15-point Gauss-Kronrod with
// global adaptive bisection, and tanh-sinh for endpoint singularities.

#include <functional>

namespace expfam::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Single 15-point Kronrod panel on [a, b]; error is |K15 - G7|.
Estimate gauss_kronrod_15(const Integrand& f, double a, double b);

/// Global adaptive Gauss-Kronrod on [a, b]. Bisects the panel with the
/// largest error until the summed error is below rel_tol * |value|.
/// Panels are not split beyond max_depth bisections.
Estimate adaptive_gauss_kronrod(const Integrand& f, double a, double b,
                                double rel_tol, int max_depth);

/// tanh-sinh rule on [a, b], refining the step by halves until successive
/// levels agree to rel_tol. The integrand may be singular at either end; it
/// is evaluated only strictly inside (a, b). `f_left(d)` receives the
/// distance d from a, so abscissae close to a keep full relative precision.
Estimate tanh_sinh(const Integrand& f_left, double a, double b, double rel_tol,
                   int max_levels = 12);

}  // namespace expfam::quad

#endif  // EXPFAM_QUADRATURE_HPP
