#pragma once

#include <cstddef>
#include <functional>

namespace volterra {

using RealFunction = std::function<double(double)>;

struct QuadratureConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  std::size_t max_evaluations = 2'000'000;

  /// Both tolerances set to `tol`.
  static QuadratureConfig with_tolerance(double tol) { return {tol, tol, 2'000'000}; }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Integrable endpoint singularities are tolerated since the rule never
/// samples the endpoints. Throws QuadratureError when the evaluation budget
/// runs out before the tolerance is met, and NumericalError on a non-finite
/// integrand value.
QuadratureResult integrate_finite(const RealFunction& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

/// Integral of f over [a, inf) summed over geometrically growing panels
/// [a, a+1], [a+1, a+3], [a+3, a+7], ... Summation stops once two
/// consecutive panels contribute less than a tenth of the tolerance.
QuadratureResult integrate_semiinfinite(const RealFunction& f, double a,
                                        const QuadratureConfig& cfg = {});

/// Integral of f over (-inf, inf), split at `split`.
QuadratureResult integrate_real_line(const RealFunction& f, double split,
                                     const QuadratureConfig& cfg = {});

/// The 7/15 rule on a single interval without adaptation.
QuadratureResult gauss_kronrod_15(const RealFunction& f, double a, double b);

}  // namespace volterra
