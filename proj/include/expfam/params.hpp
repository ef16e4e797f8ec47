#ifndef EXPFAM_PARAMS_HPP
#define EXPFAM_PARAMS_HPP

namespace expfam {

/// Parameter point (lambda, mu, nu) of I(lambda, mu, nu; z) = int_0^z x^lambda E_nu(x^mu) dx.
struct ParamTriple {
  double lambda = 0.0;
  double mu = 1.0;
  double nu = 0.0;

  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

}  // namespace expfam

#endif  // EXPFAM_PARAMS_HPP
