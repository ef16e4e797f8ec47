#ifndef EXPFAM_ERRORS_HPP
#define EXPFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expfam {

/// Argument outside the domain of a function (e.g. x < 0, z <= 0, mu <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole of the complete Gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// (lambda, mu, nu) outside the existence region of I(lambda, mu, nu; z).
class InadmissibleError : public DomainError {
 public:
  InadmissibleError(const std::string& what, double bound)
      : DomainError(what), bound_(bound) {}
  /// The lower bound lambda must strictly exceed.
  double bound() const { return bound_; }

 private:
  double bound_;
};

/// Admissible triple that violates the extra condition lambda > mu - 1
/// required by the reduced (one-step recursed) form.
class SideConditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// H function parameters for which the defining integral diverges.
class ExistenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request beyond what the kernels support (e.g. recursion-depth cap).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expfam

#endif  // EXPFAM_ERRORS_HPP
