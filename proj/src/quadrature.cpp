#include "volterra/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "volterra/errors.hpp"

namespace volterra {
namespace {

// Kronrod abscissae on [0, 1); odd indices are the Gauss-Legendre 7 nodes.
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

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

double checked(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg << "quadrature: non-finite integrand value at x = " << x;
    throw NumericalError(msg.str());
  }
  return y;
}

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double tolerance_for(const QuadratureConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

}  // namespace

QuadratureResult gauss_kronrod_15(const RealFunction& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const double fc = checked(f, centre);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked(f, centre - dx);
    f2[j] = checked(f, centre + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double value = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > kTiny / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {value, err, 15};
}

QuadratureResult integrate_finite(const RealFunction& f, double a, double b,
                                  const QuadratureConfig& cfg) {
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
    throw DomainError("integrate_finite: tolerances must be positive");

  const QuadratureResult first = gauss_kronrod_15(f, a, b);
  std::size_t evaluations = first.evaluations;
  std::priority_queue<Panel> active;
  active.push({a, b, first.value, first.error_estimate});
  double total = first.value;
  double total_error = first.error_estimate;
  // Panels too narrow to split further are retired with their error.
  double retired_value = 0.0;
  double retired_error = 0.0;

  while (total_error > tolerance_for(cfg, total)) {
    if (active.empty()) break;
    if (evaluations + 30 > cfg.max_evaluations) {
      throw QuadratureError("integrate_finite: evaluation budget exhausted before tolerance was met",
                            total, total_error);
    }
    const Panel worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b) ||
        (worst.b - worst.a) <= 8.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      retired_value += worst.value;
      retired_error += worst.error;
      continue;
    }
    const QuadratureResult left = gauss_kronrod_15(f, worst.a, mid);
    const QuadratureResult right = gauss_kronrod_15(f, mid, worst.b);
    evaluations += left.evaluations + right.evaluations;
    total += left.value + right.value - worst.value;
    total_error += left.error_estimate + right.error_estimate - worst.error;
    active.push({worst.a, mid, left.value, left.error_estimate});
    active.push({mid, worst.b, right.value, right.error_estimate});
  }

  // Re-sum in a fixed order so the result does not depend on the update
  // history of the running totals.
  std::vector<Panel> panels;
  panels.reserve(active.size());
  while (!active.empty()) {
    panels.push_back(active.top());
    active.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  double value = retired_value;
  double error = retired_error;
  for (const Panel& p : panels) {
    value += p.value;
    error += p.error;
  }
  if (error > tolerance_for(cfg, value) && retired_error > 0.5 * error) {
    throw QuadratureError("integrate_finite: round-off limits the attainable accuracy", value, error);
  }
  return {value, error, evaluations};
}

QuadratureResult integrate_semiinfinite(const RealFunction& f, double a,
                                        const QuadratureConfig& cfg) {
  constexpr int kMaxPanels = 120;
  QuadratureConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol / 4.0;
  panel_cfg.rel_tol = cfg.rel_tol / 4.0;

  QuadratureResult total;
  double left = a;
  double width = 1.0;
  int small_in_a_row = 0;
  for (int panel = 0; panel < kMaxPanels; ++panel) {
    const double right = left + width;
    if (total.evaluations >= cfg.max_evaluations) break;
    panel_cfg.max_evaluations = cfg.max_evaluations - total.evaluations;
    const QuadratureResult piece = integrate_finite(f, left, right, panel_cfg);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.evaluations += piece.evaluations;

    const double threshold = tolerance_for(cfg, total.value) / 10.0;
    small_in_a_row = std::abs(piece.value) < threshold ? small_in_a_row + 1 : 0;
    if (small_in_a_row == 2) {
      // The last small panel bounds the discarded tail.
      total.error_estimate += std::abs(piece.value);
      return total;
    }
    left = right;
    width *= 2.0;
  }
  throw QuadratureError("integrate_semiinfinite: integrand tail did not decay below tolerance",
                        total.value, total.error_estimate);
}

QuadratureResult integrate_real_line(const RealFunction& f, double split,
                                     const QuadratureConfig& cfg) {
  QuadratureConfig half = cfg;
  half.abs_tol = cfg.abs_tol / 2.0;
  const QuadratureResult right = integrate_semiinfinite([&](double x) { return f(split + x); }, 0.0, half);
  half.max_evaluations = cfg.max_evaluations > right.evaluations ? cfg.max_evaluations - right.evaluations : 1;
  const QuadratureResult left = integrate_semiinfinite([&](double x) { return f(split - x); }, 0.0, half);
  return {left.value + right.value, left.error_estimate + right.error_estimate,
          left.evaluations + right.evaluations};
}

}  // namespace volterra
