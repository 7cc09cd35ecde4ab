#pragma once

#include <optional>

#include "volterra/scalar.hpp"

namespace volterra {

/// Parabolic inversion contour s(theta) = crossing + width ((i theta + 1)^2 - 1),
/// sampled by the trapezoidal rule at theta_j = j * step, |j| <= nodes.
struct ContourSpec {
  double crossing = 0.5;  ///< where the parabola meets the real axis
  double width = 1.0;
  double step = 0.1;
  int nodes = 8;
  bool residue_mode = true;  ///< subtract the pole at s = 1 (integer beta)
  double predicted_error = 0.0;

  /// Throws DomainError when the invariants are violated: nodes >= 8,
  /// width > 0, step > 0, 0 < crossing < 1 in residue mode and crossing > 1
  /// otherwise.
  void validate() const;

  Complex point(double theta) const;
  Complex derivative(double theta) const;
};

/// M(s, beta, alpha) = 1 / (s^{alpha+1} (Ln s)^{beta+1}).
/// The branch cut is (-inf, 0] for integer beta and (-inf, 1] otherwise;
/// points on the cut, s = 0 and s = 1 raise DomainError.
Complex transform_value(Complex s, double beta, double alpha);

/// Chooses width, step and node count so that the predicted discretisation
/// and truncation errors stay below `abs_tol`. The crossing defaults to 0.5
/// for integer beta (residue subtraction) and 1.5 otherwise. For integer
/// beta a crossing above 1 turns residue subtraction off. Throws
/// ToleranceUnachievable when e^{crossing t} round-off amplification alone
/// exceeds abs_tol.
ContourSpec contour_for(double t, double beta, double abs_tol,
                        std::optional<double> crossing = std::nullopt);

/// Trapezoidal approximation of (1/2 pi i) int e^{st} M(s) ds over the
/// contour, summed over the upper half and doubled (conjugate symmetry).
double contour_integral(const ContourSpec& contour, double t, double beta, double alpha);

/// The same sum over all 2N+1 nodes without using symmetry. Its imaginary
/// part is a consistency diagnostic and should vanish.
Complex contour_sum_full(const ContourSpec& contour, double t, double beta, double alpha);

struct InversionResult {
  double value = 0.0;
  double contour_part = 0.0;
  double residue = 0.0;
  double roundoff_estimate = 0.0;
  ContourSpec contour;
};

/// mu(t, beta, alpha) by numerical Laplace inversion to relative tolerance
/// `tol`. For integer beta the residue e^t P_k(t)/k! is added to the
/// contour part. An explicit crossing above 1 encloses the pole instead,
/// with no residue term.
InversionResult invert_detailed(double t, double beta, double alpha, double tol = 1e-10,
                                std::optional<double> crossing = std::nullopt);
double invert(double t, double beta, double alpha, double tol = 1e-10);

}  // namespace volterra
