#include "expfam/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "expfam/errors.hpp"

namespace expfam {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

// Lanczos approximation, g = 6.024680040776729583740234375, N = 13, written
// as a rational function in x (numerator / x(x+1)...(x+11)).
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosGMinusHalf = 5.524680040776729583740234375;
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408};
constexpr std::array<double, 13> kLanczosDen = {
    0.0,         39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0,  13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,      66.0,       1.0};

// zeta(k) - 1 for k = 2..30; coefficients of the log Gamma(1+a) expansion.
constexpr std::array<double, 29> kZetaMinusOne = {
    0.64493406684822643647,       0.2020569031595942854,
    0.082323233711138191516,      0.036927755143369926331,
    0.017343061984449139715,      0.0083492773819228268398,
    0.0040773561979443393787,     0.0020083928260822144179,
    0.00099457512781808533715,    0.0004941886041194645587,
    0.00024608655330804829864,    0.00012271334757848914675,
    6.1248135058704829259e-05,    3.0588236307020493552e-05,
    1.5282259408651871733e-05,    7.6371976378997622736e-06,
    3.8172932649998398565e-06,    1.9082127165539389257e-06,
    9.5396203387279611315e-07,    4.7693298678780646312e-07,
    2.3845050272773299e-07,       1.1921992596531107307e-07,
    5.9608189051259479612e-08,    2.9803503514652280186e-08,
    1.4901554828365041235e-08,    7.450711789835429492e-09,
    3.7253340247884570548e-09,    1.8626597235130490064e-09,
    9.3132743241966818287e-10};

bool is_integer(double a) { return std::floor(a) == a; }

double lanczos_sum(double x) {
  double num = 0.0;
  double den = 0.0;
  // Horner in x for small x, in 1/x for large x, to avoid overflow.
  if (x < 5.0) {
    for (int i = 12; i >= 0; --i) {
      num = num * x + kLanczosNum[i];
      den = den * x + kLanczosDen[i];
    }
  } else {
    for (int i = 0; i < 13; ++i) {
      num = num / x + kLanczosNum[i];
      den = den / x + kLanczosDen[i];
    }
  }
  return num / den;
}

// sin(pi x) with exact argument reduction.
double sinpi(double x) {
  const double y = std::fmod(std::abs(x), 2.0);
  const int n = static_cast<int>(std::round(2.0 * y));
  double r = 0.0;
  switch (n) {
    case 0: r = std::sin(kPi * y); break;
    case 1: r = std::cos(kPi * (y - 0.5)); break;
    case 2: r = std::sin(kPi * (1.0 - y)); break;
    case 3: r = -std::cos(kPi * (y - 1.5)); break;
    case 4: r = std::sin(kPi * (y - 2.0)); break;
    default: break;
  }
  return std::copysign(1.0, x) * r;
}

// x^a e^-x, split to keep each factor correctly rounded when it can be.
double power_exp(double a, double x) {
  if (x < 700.0) {
    const double p = std::pow(x, a);
    if (std::isfinite(p) && p != 0.0) return p * std::exp(-x);
  }
  return std::exp(a * std::log(x) - x);
}

// Series for gamma(a, x), a > 0.
double lower_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps * 0.5) break;
  }
  return sum * power_exp(a, x);
}

// Modified Lentz continued fraction; returns h with Gamma(a, x) = x^a e^-x h.
double upper_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw UnsupportedError("incomplete gamma continued fraction did not converge at a=" +
                         std::to_string(a) + ", x=" + std::to_string(x));
}

// Gamma(n, x) for integer 1 <= n <= 30 as a terminating sum.
double upper_integer(int n, double x) {
  if (x >= 1.0) {
    // x^(n-1) e^-x * sum_j (n-1)!/(n-1-j)! x^-j
    double s = 1.0;
    for (int m = 1; m <= n - 1; ++m) s = 1.0 + s * m / x;
    return s * power_exp(n - 1, x);
  }
  double s = 1.0;
  for (int k = n - 1; k >= 1; --k) s = 1.0 + s * x / k;
  double fact = 1.0;
  for (int k = 2; k < n; ++k) fact *= k;
  return fact * s * std::exp(-x);
}

// Gamma(a, x) for 0 < |a| <= 1/2 and x < 1.5:
//   Gamma(a, x) = [(Gamma(1+a) - 1) - (x^a - 1)] / a - x^a sum_{n>=1} (-x)^n / (n! (a+n))
double upper_small_a(double a, double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= -x / n;
    const double add = term / (a + n);
    sum += add;
    if (std::abs(add) < std::abs(sum) * kEps * 0.5) break;
  }
  const double xa = std::pow(x, a);
  return (gamma1pm1(a) - std::expm1(a * std::log(x))) / a - xa * sum;
}

double e1_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= -x / n;
    const double add = term / n;
    sum += add;
    if (std::abs(add) < std::abs(sum) * kEps * 0.5) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

// Upper incomplete gamma for a > 0, x > 0.
double upper_positive(double a, double x) {
  if (x >= a + 1.0) {
    return power_exp(a, x) * upper_fraction(a, x);
  }
  if (is_integer(a) && a <= 30.0) return upper_integer(static_cast<int>(a), x);
  if (a <= 0.5) return upper_small_a(a, x);
  return gamma_complete(a) - lower_series(a, x);
}

// x^-a Gamma(a, x), i.e. E_(1-a)(x), for x > 0 and any real a.
double upper_scaled(double a, double x) {
  if (x >= std::max(1.0, a + 1.0)) {
    return std::exp(-x) * upper_fraction(a, x);
  }
  if (a > 0.0) return upper_positive(a, x) * std::pow(x, -a);
  if (a == 0.0) return expint_e1(x);
  if (a >= -0.5) return upper_small_a(a, x) * std::pow(x, -a);

  // Downward recursion T(c) = (x T(c+1) - e^-x) / c from a base in (-1/2, 1/2].
  const double steps = std::ceil(-0.5 - a);
  if (steps > kMaxRecursionDepth) {
    throw UnsupportedError("gamma_upper: first argument " + std::to_string(a) +
                           " needs more than " + std::to_string(kMaxRecursionDepth) +
                           " recursion steps for x < 1");
  }
  const int k = static_cast<int>(steps);
  const double base = a + k;
  double t = 0.0;
  if (base == 0.0) {
    t = expint_e1(x);
  } else {
    t = upper_small_a(base, x) * std::pow(x, -base);
  }
  const double ex = std::exp(-x);
  for (int j = 1; j <= k; ++j) {
    const double c = base - j;
    t = (x * t - ex) / c;
  }
  return t;
}

}  // namespace

double gamma_complete(double a) {
  if (std::isnan(a)) throw DomainError("gamma_complete: NaN argument");
  if (a <= 0.0 && is_integer(a)) {
    throw PoleError("gamma_complete: pole at nonpositive integer a=" + std::to_string(a));
  }
  if (is_integer(a) && a <= 23.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(a); ++k) f *= k;
    return f;
  }
  const double absa = std::abs(a);
  if (absa < 1e-20) return 1.0 / a;
  if (a > 171.7) return std::numeric_limits<double>::infinity();
  if (a < -190.0) return 0.0;

  const double y = absa + kLanczosGMinusHalf;
  // Correction for the rounding of y.
  double z = 0.0;
  if (absa > kLanczosGMinusHalf) {
    const double q = y - absa;
    z = q - kLanczosGMinusHalf;
  } else {
    const double q = y - kLanczosGMinusHalf;
    z = q - absa;
  }
  z = z * kLanczosG / y;

  double r = 0.0;
  if (a < 0.0) {
    r = -kPi / sinpi(absa) / absa * std::exp(y) / lanczos_sum(absa);
    r -= z * r;
    if (absa < 140.0) {
      r /= std::pow(y, absa - 0.5);
    } else {
      const double sqrtpow = std::pow(y, absa / 2.0 - 0.25);
      r /= sqrtpow;
      r /= sqrtpow;
    }
  } else {
    r = lanczos_sum(absa) / std::exp(y);
    r += z * r;
    if (absa < 140.0) {
      r *= std::pow(y, absa - 0.5);
    } else {
      const double sqrtpow = std::pow(y, absa / 2.0 - 0.25);
      r *= sqrtpow;
      r *= sqrtpow;
    }
  }
  return r;
}

double gamma1pm1(double a) {
  if (std::abs(a) <= 0.5) {
    // log Gamma(1+a) = -log(1+a) + a (1 - gamma_E) + sum_k (-1)^k (zeta(k) - 1) a^k / k
    double sum = 0.0;
    for (int k = 30; k >= 2; --k) {
      sum = sum * -a + kZetaMinusOne[k - 2] / k;
    }
    const double lg = -std::log1p(a) + a * (1.0 - kEulerGamma) + sum * a * a;
    return std::expm1(lg);
  }
  return gamma_complete(1.0 + a) - 1.0;
}

double gamma_lower(double a, double x) {
  if (!(a > 0.0)) {
    throw DomainError("gamma_lower: requires a > 0, got a=" + std::to_string(a));
  }
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("gamma_lower: requires x >= 0, got x=" + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return gamma_complete(a);
  if (x < a + 1.0) return lower_series(a, x);
  return gamma_complete(a) - upper_positive(a, x);
}

double gamma_upper(double a, double x) {
  if (std::isnan(a) || std::isnan(x) || x < 0.0) {
    throw DomainError("gamma_upper: requires x >= 0, got x=" + std::to_string(x));
  }
  if (x == 0.0) {
    if (a > 0.0) return gamma_complete(a);
    throw DomainError("gamma_upper: Gamma(a, 0) diverges for a <= 0, got a=" +
                      std::to_string(a));
  }
  if (std::isinf(x)) return 0.0;
  if (a > 0.0) return upper_positive(a, x);
  if (x >= 1.0) return power_exp(a, x) * upper_fraction(a, x);
  if (a == 0.0) return expint_e1(x);
  if (a >= -0.5) return upper_small_a(a, x);
  return std::pow(x, a) * upper_scaled(a, x);
}

double gamma_sum_check(double a, double x) {
  return gamma_lower(a, x) + gamma_upper(a, x) - gamma_complete(a);
}

double expint_e1(double x) {
  if (!(x > 0.0)) throw DomainError("expint_e1: requires x > 0");
  if (std::isinf(x)) return 0.0;
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * upper_fraction(0.0, x);
}

double expint(double nu, double z) {
  if (std::isnan(nu)) throw DomainError("expint: NaN order");
  if (!(z > 0.0)) {
    throw DomainError("expint: requires z > 0, got z=" + std::to_string(z));
  }
  if (std::isinf(z)) return 0.0;
  return upper_scaled(1.0 - nu, z);
}

double expint_derivative(double nu, double z) { return -expint(nu - 1.0, z); }

RecurrenceResidual expint_recurrence_residual(double nu, double z) {
  const double e = expint(nu, z);
  const double ez = std::exp(-z);
  RecurrenceResidual r{};
  if (nu != 1.0) {
    r.first = e - (ez - z * expint(nu - 1.0, z)) / (nu - 1.0);
  }
  r.second = e - (ez - nu * expint(nu + 1.0, z)) / z;
  return r;
}

double expint_leading_order(double nu, double z) {
  if (!(z > 0.0)) {
    throw DomainError("expint_leading_order: requires z > 0");
  }
  if (nu > 1.0) return 1.0 / (nu - 1.0);
  if (nu == 1.0) return -std::log(z);
  return gamma_complete(1.0 - nu) * std::pow(z, nu - 1.0);
}

GammaRecursionResidual gamma_recursion_residual(double a, double x) {
  if (!(a > 0.0)) throw DomainError("gamma_recursion_residual: requires a > 0");
  if (!(x > 0.0)) throw DomainError("gamma_recursion_residual: requires x > 0");
  const double px = power_exp(a, x);

  const double gl1 = gamma_lower(a + 1.0, x);
  const double gl = a * gamma_lower(a, x);
  const double lower_scale = std::max({std::abs(gl1), std::abs(gl), px});

  const double gu1 = gamma_upper(a + 1.0, x);
  const double gu = a * gamma_upper(a, x);
  const double upper_scale = std::max({std::abs(gu1), std::abs(gu), px});

  return {(gl1 - (gl - px)) / lower_scale, (gu1 - (gu + px)) / upper_scale};
}

}  // namespace expfam
