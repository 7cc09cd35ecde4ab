#include "volterra/logkernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "volterra/direct.hpp"
#include "volterra/errors.hpp"
#include "volterra/scalar.hpp"

namespace volterra {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> difference_first(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw DomainError("SampledFunction: finite-difference derivative needs at least 5 samples");
  std::vector<double> d(n);
  const double s = 12.0 * h;
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / s;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / s;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / s;
  }
  const std::size_t m = n - 1;
  d[m] = (25.0 * f[m] - 48.0 * f[m - 1] + 36.0 * f[m - 2] - 16.0 * f[m - 3] + 3.0 * f[m - 4]) / s;
  d[m - 1] = (3.0 * f[m] + 10.0 * f[m - 1] - 18.0 * f[m - 2] + 6.0 * f[m - 3] - f[m - 4]) / s;
  return d;
}

std::vector<double> difference_second(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 6) throw DomainError("SampledFunction: finite-difference second derivative needs at least 6 samples");
  std::vector<double> d(n);
  const double s = 12.0 * h * h;
  d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) / s;
  d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) / s;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / s;
  }
  const std::size_t m = n - 1;
  d[m] = (45.0 * f[m] - 154.0 * f[m - 1] + 214.0 * f[m - 2] - 156.0 * f[m - 3] + 61.0 * f[m - 4] -
          10.0 * f[m - 5]) / s;
  d[m - 1] = (10.0 * f[m] - 15.0 * f[m - 1] - 4.0 * f[m - 2] + 14.0 * f[m - 3] - 6.0 * f[m - 4] +
              f[m - 5]) / s;
  return d;
}

// Largest |k-th forward difference| / h^k over the grid.
double max_scaled_difference(const std::vector<double>& f, double h, int order) {
  std::vector<double> d = f;
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return max_abs(d) / std::pow(h, order);
}

void check_derivative(const std::vector<double>& f, double t0, double h,
                      const RealFunction& df, int order) {
  const std::size_t n = f.size();
  if (n < static_cast<std::size_t>(order + 3)) return;
  const double scale = std::max(1.0, max_abs(f));
  const double higher = max_scaled_difference(f, h, order + 2);
  // Central differences err by h^2/6 f''' (first) or h^2/12 f'''' (second).
  const double truncation = (order == 1 ? 1.0 / 3.0 : 1.0 / 6.0) * h * h * higher;
  const double rounding = (order == 1 ? 100.0 : 1000.0) * kEps * scale / std::pow(h, order);
  const double tol = truncation + rounding + 1e-12 * scale;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double central = order == 1 ? (f[i + 1] - f[i - 1]) / (2.0 * h)
                                      : (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
    const double t = t0 + static_cast<double>(i) * h;
    const double analytic = df(t);
    if (!(std::abs(analytic - central) <= tol)) {
      std::ostringstream msg;
      msg << "SampledFunction: supplied " << (order == 1 ? "derivative" : "second derivative")
          << " disagrees with the samples at t = " << t;
      throw DomainError(msg.str());
    }
  }
}

// Moments m_p = int_0^h g(c (jh + x)) x^p dx, p = 0, 1, 2, for every panel j.
struct PanelMoments {
  std::vector<double> m0, m1, m2;
};

// Panel 0 holds the singular end of the kernel and uses the antiderivatives
// G' = g, H' = G, I' = H, all vanishing at 0, given at x = c h. The other
// panels are smooth and go to Kronrod quadrature.
PanelMoments panel_moments(std::size_t panels, double h, double c, const RealFunction& g,
                           double G, double H, double I, const QuadratureConfig& cfg) {
  PanelMoments m{std::vector<double>(panels), std::vector<double>(panels),
                 std::vector<double>(panels)};
  m.m0[0] = G / c;
  m.m1[0] = h * G / c - H / (c * c);
  m.m2[0] = h * h * G / c - 2.0 * h * H / (c * c) + 2.0 * I / (c * c * c);

  std::unordered_map<double, double> memo;
  for (std::size_t j = 1; j < panels; ++j) {
    const double a = static_cast<double>(j) * h;
    memo.clear();
    const auto kernel = [&](double tau) {
      auto it = memo.find(tau);
      if (it != memo.end()) return it->second;
      const double v = g(c * tau);
      memo.emplace(tau, v);
      return v;
    };
    const auto f0 = [&](double tau) { return kernel(tau); };
    const auto f1 = [&](double tau) { return kernel(tau) * (tau - a); };
    const auto f2 = [&](double tau) { return kernel(tau) * (tau - a) * (tau - a); };
    const QuadratureResult probe = gauss_kronrod_15(f0, a, a + h);
    if (probe.error_estimate <= std::max(cfg.abs_tol * h, cfg.rel_tol * std::abs(probe.value))) {
      m.m0[j] = probe.value;
      m.m1[j] = gauss_kronrod_15(f1, a, a + h).value;
      m.m2[j] = gauss_kronrod_15(f2, a, a + h).value;
    } else {
      m.m0[j] = integrate_finite(f0, a, a + h, cfg).value;
      m.m1[j] = integrate_finite(f1, a, a + h, cfg).value;
      m.m2[j] = integrate_finite(f2, a, a + h, cfg).value;
    }
  }
  return m;
}

// Quadratic interpolation weights of the smooth factor on each panel.
// forward[s][j] multiplies the sample at tau_{j+s}, s = 0, 1, 2; centred[s][j]
// the sample at tau_{j+s-1}. The centred set serves the panel touching tau = t_i.
struct QuadraticWeights {
  std::array<std::vector<double>, 3> forward;
  std::array<std::vector<double>, 3> centred;
};

QuadraticWeights quadratic_weights(const PanelMoments& m, double h) {
  const std::size_t n = m.m0.size();
  QuadraticWeights w;
  for (auto& v : w.forward) v.resize(n);
  for (auto& v : w.centred) v.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double q0 = m.m0[j];
    const double q1 = m.m1[j] / h;
    const double q2 = m.m2[j] / (h * h);
    w.forward[0][j] = q0 - 1.5 * q1 + 0.5 * q2;
    w.forward[1][j] = 2.0 * q1 - q2;
    w.forward[2][j] = 0.5 * (q2 - q1);
    w.centred[0][j] = 0.5 * (q2 - q1);
    w.centred[1][j] = q0 - q2;
    w.centred[2][j] = 0.5 * (q2 + q1);
  }
  return w;
}

// u_i = -scale int_0^{t_i} rate(t_i - tau) kernel(tau) dtau, with
// rate(t_i - tau_k) = rate[i - k].
SampledFunction convolve(const SampledFunction& f, const std::vector<double>& rate,
                         const QuadraticWeights& w, double scale) {
  const std::size_t n = f.size();
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < i; ++j) {
      sum += w.forward[0][j] * rate[i - j] + w.forward[1][j] * rate[i - j - 1] +
             w.forward[2][j] * rate[i - j - 2];
    }
    const std::size_t j = i - 1;
    sum += w.centred[0][j] * rate[2] + w.centred[1][j] * rate[1] + w.centred[2][j] * rate[0];
    u[i] = -scale * sum;
  }
  return SampledFunction(f.t0(), f.h(), std::move(u));
}

void require_origin(const SampledFunction& f, const char* who) {
  if (f.t0() != 0.0) throw DomainError(std::string(who) + ": grid must start at t = 0");
  if (f.size() < 3) throw DomainError(std::string(who) + ": at least three samples required");
  const double scale = std::max(1.0, max_abs(f.samples()));
  if (std::abs(f[0]) > 1e-12 * scale) throw DomainError(std::string(who) + ": requires f(0) = 0");
}

void check_residual(const SampledFunction& u, const SampledFunction& f, const SolverConfig& cfg,
                    const char* who) {
  if (!(cfg.residual_tolerance > 0.0)) return;
  const double fmax = max_abs(f.samples());
  if (fmax == 0.0) return;
  const double r = forward_residual(u, f) / fmax;
  if (!(r <= cfg.residual_tolerance)) {
    std::ostringstream msg;
    msg << who << ": grid too coarse, relative forward residual " << r;
    throw NumericalError(msg.str());
  }
}

}  // namespace

SampledFunction::SampledFunction(double t0, double h, std::vector<double> samples,
                                 RealFunction derivative, RealFunction second_derivative)
    : t0_(t0), h_(h), samples_(std::move(samples)), derivative_(std::move(derivative)),
      second_derivative_(std::move(second_derivative)) {
  if (samples_.empty()) throw DomainError("SampledFunction: samples must be non-empty");
  if (!(h_ > 0.0) || !std::isfinite(h_)) throw DomainError("SampledFunction: h must be positive");
  if (!std::isfinite(t0_)) throw DomainError("SampledFunction: t0 must be finite");
  for (double v : samples_) {
    if (!std::isfinite(v)) throw DomainError("SampledFunction: samples must be finite");
  }
  if (derivative_) check_derivative(samples_, t0_, h_, derivative_, 1);
  if (second_derivative_) check_derivative(samples_, t0_, h_, second_derivative_, 2);
}

SampledFunction SampledFunction::from_function(const RealFunction& f, double t0, double h,
                                               std::size_t count, RealFunction derivative,
                                               RealFunction second_derivative) {
  std::vector<double> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = f(t0 + static_cast<double>(i) * h);
  return SampledFunction(t0, h, std::move(s), std::move(derivative), std::move(second_derivative));
}

double SampledFunction::interpolate(double t) const {
  const double span = t_end() - t0_;
  if (!(t >= t0_ - 1e-12 * std::max(1.0, span) && t <= t_end() + 1e-12 * std::max(1.0, span))) {
    throw DomainError("SampledFunction::interpolate: t outside the grid");
  }
  if (size() == 1) return samples_[0];
  const double x = std::clamp((t - t0_) / h_, 0.0, static_cast<double>(size() - 1));
  const std::size_t i = std::min(static_cast<std::size_t>(x), size() - 2);
  const double w = x - static_cast<double>(i);
  return (1.0 - w) * samples_[i] + w * samples_[i + 1];
}

std::vector<double> SampledFunction::derivative_samples() const {
  if (!derivative_) return difference_first(samples_, h_);
  std::vector<double> d(size());
  for (std::size_t i = 0; i < size(); ++i) d[i] = derivative_(node(i));
  return d;
}

std::vector<double> SampledFunction::second_derivative_samples() const {
  if (!second_derivative_) return difference_second(samples_, h_);
  std::vector<double> d(size());
  for (std::size_t i = 0; i < size(); ++i) d[i] = second_derivative_(node(i));
  return d;
}

SampledFunction solve_first_kind(const SampledFunction& f, const SolverConfig& cfg) {
  require_origin(f, "solve_first_kind");
  const double c = std::exp(-constants::euler_gamma);
  const double h = f.h();
  const double x1 = c * h;
  // Kernel nu'; its antiderivatives are nu = mu(., 0, 0), mu(., 0, 1), mu(., 0, 2).
  const PanelMoments m = panel_moments(
      f.size() - 1, h, c, [&](double x) { return nu_dot(x, cfg.quadrature); },
      mu_direct(x1, 0.0, 0.0, cfg.quadrature), mu_direct(x1, 0.0, 1.0, cfg.quadrature),
      mu_direct(x1, 0.0, 2.0, cfg.quadrature), cfg.quadrature);
  const SampledFunction u = convolve(f, f.derivative_samples(), quadratic_weights(m, h), c);
  check_residual(u, f, cfg, "solve_first_kind");
  return u;
}

SampledFunction solve_second_form(const SampledFunction& f, const SolverConfig& cfg) {
  require_origin(f, "solve_second_form");
  const std::vector<double> rate = f.derivative_samples();
  const double scale = std::max(1.0, max_abs(rate));
  if (std::abs(rate[0]) > 1e-8 * scale) throw DomainError("solve_second_form: requires f'(0) = 0");
  const double c = std::exp(-constants::euler_gamma);
  const double h = f.h();
  const double x1 = c * h;
  const PanelMoments m = panel_moments(
      f.size() - 1, h, c, [&](double x) { return mu_direct(x, 0.0, 0.0, cfg.quadrature); },
      mu_direct(x1, 0.0, 1.0, cfg.quadrature), mu_direct(x1, 0.0, 2.0, cfg.quadrature),
      mu_direct(x1, 0.0, 3.0, cfg.quadrature), cfg.quadrature);
  const SampledFunction u =
      convolve(f, f.second_derivative_samples(), quadratic_weights(m, h), 1.0);
  check_residual(u, f, cfg, "solve_second_form");
  return u;
}

double special_case_linear(double t, const QuadratureConfig& cfg) {
  if (!(t > 0.0)) throw DomainError("special_case_linear: requires t > 0");
  const double log_scaled = std::log(t) - constants::euler_gamma;
  const auto integrand = [=](double u) { return power_over_gamma(log_scaled, u, u + 1.0); };
  return -integrate_semiinfinite(integrand, 0.0, cfg).value;
}

double apply_forward(const SampledFunction& u, double t) {
  if (u.t0() != 0.0) throw DomainError("apply_forward: grid must start at t = 0");
  const double slack = 1e-12 * std::max(1.0, u.t_end());
  if (!(t >= 0.0 && t <= u.t_end() + slack)) throw DomainError("apply_forward: t outside the grid");
  t = std::min(t, u.t_end());
  if (t == 0.0) return 0.0;

  // Antiderivatives of log s and s log s, both vanishing at s = 0.
  const auto phi0 = [](double s) { return s > 0.0 ? s * std::log(s) - s : 0.0; };
  const auto phi1 = [](double s) { return s > 0.0 ? 0.5 * s * s * std::log(s) - 0.25 * s * s : 0.0; };

  const double h = u.h();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    const double a = u.node(j);
    if (a >= t) break;
    const double b = std::min(u.node(j + 1), t);
    const double slope = (u[j + 1] - u[j]) / h;
    // With s = t - tau: u = u_j + slope (s_hi - s) on s in [t - b, t - a].
    const double s_lo = t - b;
    const double s_hi = t - a;
    const double l0 = phi0(s_hi) - phi0(s_lo);
    const double l1 = phi1(s_hi) - phi1(s_lo);
    sum += (u[j] + slope * s_hi) * l0 - slope * l1;
  }
  return sum;
}

double forward_residual(const SampledFunction& u, const SampledFunction& f) {
  if (u.size() != f.size() || u.t0() != f.t0() || u.h() != f.h()) {
    throw DomainError("forward_residual: grids differ");
  }
  double r = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    r = std::max(r, std::abs(apply_forward(u, f.node(i)) - f[i]));
  }
  return r;
}

}  // namespace volterra
