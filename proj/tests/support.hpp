#ifndef EXPFAM_TESTS_SUPPORT_HPP
#define EXPFAM_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

namespace expfam::test {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Fixed-seed generator so every run samples the same points.
class Sampler {
 public:
  explicit Sampler(unsigned long long seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace expfam::test

#endif  // EXPFAM_TESTS_SUPPORT_HPP
