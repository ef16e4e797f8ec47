#include "expfam/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace expfam::quad {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Kronrod abscissae (positive half, descending) and weights; the Gauss
// points are the odd-indexed abscissae plus the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxPanels = 4000;
constexpr double kRoundoffFloor = 50.0 * std::numeric_limits<double>::epsilon();
constexpr double kTMax = 6.5;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;
  // Error already at the rounding floor; bisection cannot reduce it.
  bool at_floor;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

namespace {

Estimate kronrod_panel(const Integrand& f, double a, double b, bool& at_floor) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double absolute = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    absolute += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  absolute *= std::abs(half);
  Estimate e;
  e.value = kronrod;
  // Never claim more than the rounding floor of the panel sum.
  const double floor = kRoundoffFloor * absolute;
  at_floor = std::abs(kronrod - gauss) <= floor;
  e.error = std::max(std::abs(kronrod - gauss), floor);
  e.panels = 1;
  e.converged = true;
  return e;
}

}  // namespace

Estimate gauss_kronrod_15(const Integrand& f, double a, double b) {
  bool at_floor = false;
  return kronrod_panel(f, a, b, at_floor);
}

Estimate adaptive_gauss_kronrod(const Integrand& f, double a, double b,
                                double rel_tol, int max_depth) {
  std::priority_queue<Panel> open;
  std::vector<Panel> frozen;
  double total = 0.0;
  double total_err = 0.0;
  int panels = 0;

  auto push = [&](double lo, double hi, int depth) {
    bool at_floor = false;
    const Estimate e = kronrod_panel(f, lo, hi, at_floor);
    open.push({lo, hi, e.value, e.error, depth, at_floor});
    total += e.value;
    total_err += e.error;
    ++panels;
  };
  push(a, b, 0);

  bool converged = false;
  while (true) {
    if (total_err <= rel_tol * std::abs(total)) {
      converged = true;
      break;
    }
    if (open.empty() || panels >= kMaxPanels) break;
    const Panel worst = open.top();
    open.pop();
    if (worst.depth >= max_depth || worst.at_floor) {
      frozen.push_back(worst);
      continue;
    }
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    push(worst.a, mid, worst.depth + 1);
    push(mid, worst.b, worst.depth + 1);
    --panels;
  }

  // Re-sum from the panel list to shed the drift of incremental updates.
  double value = 0.0;
  double error = 0.0;
  for (const Panel& p : frozen) {
    value += p.value;
    error += p.error;
  }
  while (!open.empty()) {
    value += open.top().value;
    error += open.top().error;
    open.pop();
  }
  return {value, error, panels, converged && error <= rel_tol * std::abs(value)};
}

Estimate tanh_sinh(const Integrand& f_left, double a, double b, double rel_tol,
                   int max_levels) {
  const double width = b - a;

  // Sum of w(t) f(x(t)) over t = k h for the given k stride.
  double absolute = 0.0;
  auto level_sum = [&](double h, bool odd_only, int& evals) {
    double sum = 0.0;
    const int kmax = static_cast<int>(kTMax / h);
    for (int k = -kmax; k <= kmax; ++k) {
      if (odd_only && k % 2 == 0) continue;
      const double t = k * h;
      const double w = 0.5 * kPi * std::sinh(t);
      const double q = std::exp(-2.0 * std::abs(w));
      const double near = width * q / (1.0 + q);
      if (near <= 0.0) continue;
      const double weight = width * kPi * std::cosh(t) * q / ((1.0 + q) * (1.0 + q));
      if (weight == 0.0) continue;
      const double dist = t < 0.0 ? near : width - near;
      const double fx = f_left(dist);
      ++evals;
      // Past the last representable point the contribution is negligible.
      if (!std::isfinite(fx)) continue;
      sum += weight * fx;
      absolute += weight * std::abs(fx);
    }
    return sum;
  };

  int evals = 0;
  double h = 1.0;
  double sum = level_sum(h, false, evals);
  double estimate = h * sum;
  double previous = estimate;
  double error = std::abs(estimate);
  bool converged = false;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    sum += level_sum(h, true, evals);
    estimate = h * sum;
    const double diff = std::abs(estimate - previous);
    const double floor = kRoundoffFloor * h * absolute;
    error = std::max(diff, floor);
    previous = estimate;
    if (level >= 3 && error <= rel_tol * std::abs(estimate)) {
      converged = true;
      break;
    }
    // Level differences are down to rounding noise; refining further cannot help.
    if (level >= 3 && diff <= floor) break;
  }
  return {estimate, error, evals, converged};
}

}  // namespace expfam::quad
