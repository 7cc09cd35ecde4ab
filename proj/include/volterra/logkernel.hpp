#pragma once

#include <cstddef>
#include <vector>

#include "volterra/quadrature.hpp"

namespace volterra {

/// Samples of a function on the uniform grid t0 + i h, with optional
/// analytic first and second derivatives.
class SampledFunction {
 public:
  /// Throws DomainError on empty samples, h <= 0, or a supplied derivative that
  /// disagrees with central differences beyond their O(h^2) error.
  SampledFunction(double t0, double h, std::vector<double> samples,
                  RealFunction derivative = {}, RealFunction second_derivative = {});

  /// Samples f at t0 + i h, i = 0..count-1.
  static SampledFunction from_function(const RealFunction& f, double t0, double h,
                                       std::size_t count, RealFunction derivative = {},
                                       RealFunction second_derivative = {});

  double t0() const { return t0_; }
  double h() const { return h_; }
  std::size_t size() const { return samples_.size(); }
  double t_end() const { return node(size() - 1); }
  double node(std::size_t i) const { return t0_ + static_cast<double>(i) * h_; }
  const std::vector<double>& samples() const { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }

  bool has_derivative() const { return static_cast<bool>(derivative_); }
  bool has_second_derivative() const { return static_cast<bool>(second_derivative_); }

  /// Piecewise-linear interpolant. Throws DomainError outside [t0, t_end].
  double interpolate(double t) const;

  /// f' at the nodes: analytic if supplied, else 4th-order differences (needs 5 samples).
  std::vector<double> derivative_samples() const;
  /// f'' at the nodes: analytic if supplied, else 4th-order differences (needs 6 samples).
  std::vector<double> second_derivative_samples() const;

 private:
  double t0_;
  double h_;
  std::vector<double> samples_;
  RealFunction derivative_;
  RealFunction second_derivative_;
};

struct SolverConfig {
  QuadratureConfig quadrature{};
  /// Maximum accepted |forward(u) - f| / max|f| over the grid; <= 0 skips the check.
  double residual_tolerance = 1e-2;
};

/// u(t) = -e^{-gamma} int_0^t f'(t - tau) nu'(tau e^{-gamma}) dtau, the solution of
/// int_0^t u(tau) log(t - tau) dtau = f(t). Requires t0 = 0 and f(0) = 0.
SampledFunction solve_first_kind(const SampledFunction& f, const SolverConfig& cfg = {});

/// u(t) = -int_0^t f''(t - tau) nu(tau e^{-gamma}) dtau, the first form
/// integrated by parts. The scale factor e^{-gamma} cancels here.
/// Requires t0 = 0 and f(0) = f'(0) = 0.
SampledFunction solve_second_form(const SampledFunction& f, const SolverConfig& cfg = {});

/// Solution for f(t) = t: -int_0^inf t^u e^{-gamma u} / Gamma(u+1) du.
double special_case_linear(double t, const QuadratureConfig& cfg = {});

/// int_0^t u(tau) log(t - tau) dtau for the piecewise-linear interpolant of u.
/// Requires u.t0() = 0 and t in [0, u.t_end()].
double apply_forward(const SampledFunction& u, double t);

/// max_i |apply_forward(u, t_i) - f_i| over the common grid.
double forward_residual(const SampledFunction& u, const SampledFunction& f);

}  // namespace volterra
