#ifndef EXPFAM_ORACLE_HPP
#define EXPFAM_ORACLE_HPP

// Independent numerical evaluation of the integrals the closed forms claim to
// solve. Only the special functions are shared; nothing here calls into the
// closed-form layer.

#include "expfam/params.hpp"

namespace expfam {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  /// Split point of the singular head [0, split] in the integration variable;
  /// a value <= 0 selects the default min(0.1, upper / 2).
  double split_point = 0.0;
  int max_depth = 40;
  /// Integrate in u = x^mu (true) or directly in x (false).
  bool linearize = true;
};

struct OracleResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int panels_used = 0;
  double singular_segment_value = 0.0;
  bool converged = false;
};

/// Throws DomainError unless 0 < rel_tol < 1e-3 and
/// max_depth >= 10.
void validate(const QuadratureSpec& spec);

/// Numerically integrates int_0^z x^lambda E_nu(x^mu) dx.
/// Throws InadmissibleError when the integral diverges at x = 0, DomainError
/// when z <= 0 or mu <= 0.
OracleResult oracle_I(const ParamTriple& p, double z, const QuadratureSpec& spec = {});

/// int_lower^z x^lambda E_nu(x^mu) dx for 0 < lower < z, with no
/// convergence gate; used to exhibit divergence of boundary triples.
OracleResult oracle_I_from(const ParamTriple& p, double lower, double z,
                           const QuadratureSpec& spec = {});

/// Two-dimensional quadrature of
///   a c^a (4/sqrt(pi)) int_c^inf r^-nu dr int_0^y t^2 e^(-r t^2) dt,  c = 1 - 1/a.
/// Throws DomainError for a <= 1 or y < 0 and ExistenceError when the outer
/// integral diverges (nu <= -1/2).
OracleResult oracle_H(double a, double nu, double y, const QuadratureSpec& spec = {});

/// (2/sqrt(pi)) int_0^x e^(-t^2) dt by adaptive quadrature.
OracleResult oracle_erf(double x, const QuadratureSpec& spec = {});

}  // namespace expfam

#endif  // EXPFAM_ORACLE_HPP
