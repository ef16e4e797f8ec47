#ifndef EXPFAM_DYNFRIC_HPP
#define EXPFAM_DYNFRIC_HPP

// Velocity-space integrals from dynamical friction in a field of stars with
// a power-law mass spectrum (exponent a) and equipartition Maxwellian
// velocities:
//
//   H(y) = a c^a (4/sqrt(pi)) int_c^inf r^-nu dr int_0^y t^2 e^(-r t^2) dt,   c = 1 - 1/a
//        = a c^(a-nu-1/2) (4/sqrt(pi)) I(2, 2, nu; sqrt(c) y).
//
// H1 takes nu = a - 3/2 (exists for a > 1), H2 takes nu = a - 5/2 (a > 2).

#include <string>

namespace expfam {

enum class HFamily { H1, H2, Custom };

struct HSpec {
  double a = 2.0;
  HFamily family = HFamily::H1;
  /// Order used when family == Custom.
  double custom_nu = 0.0;
  double y = 0.0;
};

/// Order nu selected by the family.
double h_order(const HSpec& spec);

/// 1 - 1/a; throws DomainError unless a > 1.
double h_scale(double a);

/// Throws ExistenceError (naming the bound on a) when H does not exist.
void require_existence(const HSpec& spec);

struct HEvaluation {
  /// Through the closed form of I.
  double value = 0.0;
  /// Through the one-step reduced form of I (valid since 2 > mu - 1 = 1).
  double reduced_value = 0.0;
};

HEvaluation h_evaluate(const HSpec& spec);

/// H(y) through the closed form.
double h_eval(const HSpec& spec);

/// gamma(1/2, z) / sqrt(pi), which is erf(sqrt(z)).
double erf_from_gamma(double z);

std::string to_string(HFamily family);

}  // namespace expfam

#endif  // EXPFAM_DYNFRIC_HPP
