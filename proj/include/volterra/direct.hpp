#pragma once

#include "volterra/quadrature.hpp"

namespace volterra {

/// Argument triple of mu(t, beta, alpha).
struct VolterraParams {
  double t = 1.0;
  double beta = 0.0;
  double alpha = 0.0;

  /// Validates t > 0.
  static VolterraParams make(double t, double beta, double alpha);

  /// beta in {0, 1, 2, ...} within 1e-12.
  bool beta_is_integer() const;
};

/// Smallest admissible beta + 1 for the defining integral.
inline constexpr double kMinShiftedParameter = 1e-6;

/// mu(t, beta, alpha) = (1/Gamma(beta+1)) int_0^inf t^{u+alpha} u^beta / Gamma(u+alpha+1) du
/// by direct quadrature. Requires t > 0, alpha > -1, beta > -1 + 1e-6.
QuadratureResult mu_direct_estimate(const VolterraParams& p, const QuadratureConfig& cfg = {});
double mu_direct(const VolterraParams& p, const QuadratureConfig& cfg = {});
double mu_direct(double t, double beta, double alpha, const QuadratureConfig& cfg = {});

/// nu(t) = mu(t, 0, 0).
double nu(double t, const QuadratureConfig& cfg = {});
/// nu(t, alpha) = mu(t, 0, alpha).
double nu_alpha(double t, double alpha, const QuadratureConfig& cfg = {});
/// mu(t, beta) = mu(t, beta, 0).
double mu_beta(double t, double beta, const QuadratureConfig& cfg = {});

/// mu(t, -n-1, alpha) = (-1)^n d^n/dx^n [t^{alpha+x} / Gamma(alpha+x+1)] at x = 0,
/// with the derivative taken on a Cauchy circle.
double mu_negative_integer_beta(double t, int n, double alpha);

/// d nu / dt = int_0^inf t^{u-1} / Gamma(u) du.
QuadratureResult nu_dot_estimate(double t, const QuadratureConfig& cfg = {});
double nu_dot(double t, const QuadratureConfig& cfg = {});

}  // namespace volterra
