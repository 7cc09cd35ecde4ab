#include "volterra/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "volterra/errors.hpp"
#include "volterra/residues.hpp"

namespace volterra {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Fraction of the distance to the nearest singular line used in the
// discretisation error bound.
constexpr double kStripFraction = 0.75;
// Margin for the constants dropped from the error model.
constexpr double kSafety = 100.0;

// Smallest |s(x + i d) - target| over real x, for the contour line at
// imaginary offset d in the parameter plane. `shift` is 1 - d (upper) or
// 1 + d (lower).
double min_distance(double sigma, double width, double shift, double target) {
  const double a = sigma - target + width * shift * shift;
  const double x2 = a / width - 2.0 * shift * shift;
  if (x2 <= 0.0) return std::abs(a);
  return std::sqrt(std::max(0.0, 4.0 * width * shift * shift * (sigma - target)));
}

}  // namespace

void ContourSpec::validate() const {
  if (nodes < 8) throw DomainError("ContourSpec: at least 8 nodes are required");
  if (!(width > 0.0)) throw DomainError("ContourSpec: width must be positive");
  if (!(step > 0.0)) throw DomainError("ContourSpec: step must be positive");
  if (residue_mode && !(crossing > 0.0 && crossing < 1.0))
    throw DomainError("ContourSpec: residue mode requires the crossing in (0, 1)");
  if (!residue_mode && !(crossing > 1.0))
    throw DomainError("ContourSpec: without residue subtraction the crossing must exceed 1");
}

Complex ContourSpec::point(double theta) const {
  const Complex q(1.0, theta);
  return crossing + width * (q * q - 1.0);
}

Complex ContourSpec::derivative(double theta) const {
  return Complex(0.0, 2.0 * width) * Complex(1.0, theta);
}

Complex transform_value(Complex s, double beta, double alpha) {
  if (s == Complex(0.0, 0.0)) throw DomainError("transform_value: singular at s = 0");
  const bool integer_beta = is_nonnegative_integer(beta);
  const double cut_end = integer_beta ? 0.0 : 1.0;
  if (s.imag() == 0.0 && s.real() <= cut_end) {
    std::ostringstream msg;
    msg << "transform_value: s = " << s.real() << " lies on the branch cut (-inf, " << cut_end << "]";
    throw DomainError(msg.str());
  }
  const Complex log_s = principal_log(s);
  if (log_s == Complex(0.0, 0.0)) throw DomainError("transform_value: singular at s = 1");
  const Complex inv_power = std::exp(-(alpha + 1.0) * log_s);
  if (integer_beta) {
    const int k = static_cast<int>(std::round(beta));
    Complex denom = log_s;
    for (int i = 0; i < k; ++i) denom *= log_s;
    return inv_power / denom;
  }
  return inv_power * std::exp(-(beta + 1.0) * principal_log(log_s));
}

ContourSpec contour_for(double t, double beta, double abs_tol, std::optional<double> crossing) {
  if (!(t > 0.0)) throw DomainError("contour_for: requires t > 0");
  if (!(abs_tol > 0.0)) throw DomainError("contour_for: tolerance must be positive");

  ContourSpec best;
  best.residue_mode = is_nonnegative_integer(beta) && !(crossing && *crossing > 1.0);
  best.crossing = crossing.value_or(best.residue_mode ? 0.5 : 1.5);
  best.width = 1.0;
  best.step = 0.1;
  best.validate();

  const double c = best.crossing;
  if (kEps * std::exp(c * t) > abs_tol) {
    std::ostringstream msg;
    msg << "contour_for: round-off amplified by e^(" << c << " t) exceeds the tolerance at t = " << t;
    throw ToleranceUnachievable(msg.str());
  }

  // Branch-cut end (left) and the pole strength at s = 1 (right).
  const double cut_end = best.residue_mode ? 0.0 : 1.0;
  const double upper_strength = best.residue_mode ? 2.0 : beta + 1.0;
  const double lower_strength = beta + 1.0;
  const double log_target = std::log(abs_tol / kSafety);

  double best_cost = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 160; ++i) {
    const double w = std::pow(10.0, -4.0 + i * 0.05);
    const double sigma = c - w;

    const double up_sing = 1.0 - std::sqrt(std::max(0.0, 1.0 - (c - cut_end) / w));
    const double d_up = kStripFraction * up_sing;
    const double up_dist = min_distance(sigma, w, 1.0 - d_up, cut_end);
    const double up_denominator = t * (sigma + w * (1.0 - d_up) * (1.0 - d_up)) - log_target +
                                  upper_strength * std::max(0.0, -std::log(up_dist));
    if (up_denominator <= 0.0) continue;
    const double h_up = 2.0 * constants::pi * d_up / up_denominator;

    double h_low = 0.0;
    if (best.residue_mode) {
      const double low_sing = std::sqrt(1.0 + (1.0 - c) / w) - 1.0;
      const double d_low = kStripFraction * low_sing;
      const double low_dist = min_distance(sigma, w, 1.0 + d_low, 1.0);
      const double denominator = t * (sigma + w * (1.0 + d_low) * (1.0 + d_low)) - log_target +
                                 lower_strength * std::max(0.0, -std::log(low_dist));
      if (denominator <= 0.0) continue;
      h_low = 2.0 * constants::pi * d_low / denominator;
    } else {
      for (int j = 1; j <= 60; ++j) {
        const double d = 0.05 * j;
        const double denominator = t * (sigma + w * (1.0 + d) * (1.0 + d)) - log_target;
        if (denominator > 0.0) h_low = std::max(h_low, 2.0 * constants::pi * d / denominator);
      }
    }
    const double h = std::min(h_up, h_low);
    if (!(h > 0.0)) continue;

    // Truncation: e^{t Re s(theta)} below target at the last node.
    const double theta2 = 1.0 + (sigma * t - log_target) / (w * t);
    const double theta_max = std::sqrt(std::max(theta2, 1.0));
    const double nodes = std::ceil(theta_max / h);
    if (nodes < best_cost) {
      best_cost = nodes;
      best.width = w;
      best.step = h;
      best.nodes = static_cast<int>(std::max(8.0, nodes));
    }
  }
  if (!std::isfinite(best_cost) || best_cost > 1e7) {
    throw ToleranceUnachievable("contour_for: no admissible contour parameters found");
  }
  best.predicted_error = abs_tol;
  return best;
}

namespace {

// (1/2 pi i) e^{s t} M(s) s'(theta).
Complex contour_term(const ContourSpec& contour, double theta, double t, double beta, double alpha) {
  const Complex s = contour.point(theta);
  return std::exp(s * t) * transform_value(s, beta, alpha) * contour.derivative(theta) /
         Complex(0.0, 2.0 * constants::pi);
}

struct HalfSum {
  double value = 0.0;
  double magnitude = 0.0;
};

HalfSum half_sum(const ContourSpec& contour, double t, double beta, double alpha) {
  contour.validate();
  HalfSum out;
  for (int j = contour.nodes; j >= 1; --j) {
    const Complex term = contour_term(contour, j * contour.step, t, beta, alpha);
    out.value += 2.0 * term.real();
    out.magnitude += 2.0 * std::abs(term);
  }
  const Complex centre = contour_term(contour, 0.0, t, beta, alpha);
  out.value += centre.real();
  out.magnitude += std::abs(centre);
  out.value *= contour.step;
  out.magnitude *= contour.step;
  return out;
}

}  // namespace

double contour_integral(const ContourSpec& contour, double t, double beta, double alpha) {
  return half_sum(contour, t, beta, alpha).value;
}

Complex contour_sum_full(const ContourSpec& contour, double t, double beta, double alpha) {
  contour.validate();
  Complex sum = 0.0;
  for (int j = -contour.nodes; j <= contour.nodes; ++j)
    sum += contour_term(contour, j * contour.step, t, beta, alpha);
  return sum * contour.step;
}

namespace {

InversionResult invert_once(double t, double beta, double alpha, double tol,
                            std::optional<double> crossing) {
  InversionResult out;
  const bool residue_mode = is_nonnegative_integer(beta) && !(crossing && *crossing > 1.0);
  if (residue_mode) out.residue = residue_at_one(t, static_cast<int>(std::round(beta)), alpha);

  // Magnitude guess for the first pass: the residue, or the leading
  // exponential term e^t t^beta / Gamma(beta + 1) for t > 1.
  double scale = std::abs(out.residue);
  if (t > 1.0) scale = std::max(scale, std::exp(t + beta * std::log(t)) * recip_gamma(beta + 1.0));
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;

  for (int pass = 0; pass < 2; ++pass) {
    out.contour = contour_for(t, beta, tol * scale, crossing);
    const HalfSum sum = half_sum(out.contour, t, beta, alpha);
    out.contour_part = sum.value;
    out.value = out.residue + out.contour_part;
    out.roundoff_estimate = kEps * (sum.magnitude + std::abs(out.residue));
    const double achieved_scale = std::abs(out.value);
    if (achieved_scale >= scale || achieved_scale == 0.0) break;
    scale = 0.5 * achieved_scale;
  }
  if (!std::isfinite(out.value)) throw OverflowError("invert: non-finite result");
  if (out.roundoff_estimate > tol * std::abs(out.value)) {
    std::ostringstream msg;
    msg << "invert: round-off estimate " << out.roundoff_estimate << " exceeds tolerance at t = " << t;
    throw ToleranceUnachievable(msg.str());
  }
  return out;
}

}  // namespace

InversionResult invert_detailed(double t, double beta, double alpha, double tol,
                                std::optional<double> crossing) {
  if (!(t > 0.0)) throw DomainError("invert: requires t > 0");
  if (!(alpha > -1.0)) throw DomainError("invert: requires alpha > -1");
  if (!(beta > -1.0)) throw DomainError("invert: requires beta > -1");
  if (!(tol > 0.0)) throw DomainError("invert: tolerance must be positive");
  return invert_once(t, beta, alpha, tol, crossing);
}

double invert(double t, double beta, double alpha, double tol) {
  return invert_detailed(t, beta, alpha, tol).value;
}

}  // namespace volterra
