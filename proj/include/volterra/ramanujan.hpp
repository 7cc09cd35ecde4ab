#pragma once

#include "volterra/quadrature.hpp"

namespace volterra {

/// Arguments of the generalised Ramanujan function N_k(t, alpha).
struct RamanujanParams {
  double t = 1.0;
  int k = 0;
  double alpha = 0.0;

  /// Validates t > 0, k >= 0 and -1 + 1e-6 <= alpha <= 0.
  static RamanujanParams make(double t, int k, double alpha);
};

/// N_k(t, alpha) = (1/pi) int_0^inf e^{-rt} sin[alpha pi + (k+1) Arg(ln r + i pi)]
///                 / (r^{alpha+1} ((ln r)^2 + pi^2)^{(k+1)/2}) dr,
/// integrated in y = ln r over the whole real line.
QuadratureResult N_k_estimate(const RamanujanParams& p, const QuadratureConfig& cfg = {});
double N_k(const RamanujanParams& p, const QuadratureConfig& cfg = {});
double N_k(double t, int k, double alpha, const QuadratureConfig& cfg = {});

/// N(t) = int_0^inf e^{-rt} / (r ((ln r)^2 + pi^2)) dr.
QuadratureResult N_classic_estimate(double t, const QuadratureConfig& cfg = {});
double N_classic(double t, const QuadratureConfig& cfg = {});

/// N_k(t, 0) for k = 1, 2, 3 from the trigonometrically reduced integrands.
double N_k_special(double t, int k, const QuadratureConfig& cfg = {});

/// d^n N / dt^n = e^t - int_{-n}^inf t^u / Gamma(u+1) du.
double wood_derivative(double t, int n, const QuadratureConfig& cfg = {});

/// mu(t, k, alpha) = e^t P_k(t) / k! - N_k(t, alpha), valid for -1 < alpha <= 0.
QuadratureResult mu_via_identity_estimate(double t, int k, double alpha,
                                          const QuadratureConfig& cfg = {});
double mu_via_identity(double t, int k, double alpha, const QuadratureConfig& cfg = {});

}  // namespace volterra
