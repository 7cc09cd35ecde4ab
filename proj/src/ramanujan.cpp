#include "volterra/ramanujan.hpp"

#include <cmath>

#include "volterra/errors.hpp"
#include "volterra/residues.hpp"
#include "volterra/scalar.hpp"

namespace volterra {
namespace {

constexpr double kPi = constants::pi;

void require_positive_t(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": requires t > 0");
}

// Integrals over y = ln r are split where r t = 1; to the right the factor
// e^{-t e^y} dies off doubly exponentially.
QuadratureResult integrate_log_variable(const RealFunction& f, double t, const QuadratureConfig& cfg) {
  return integrate_real_line(f, -std::log(t), cfg);
}

}  // namespace

RamanujanParams RamanujanParams::make(double t, int k, double alpha) {
  require_positive_t(t, "RamanujanParams");
  if (k < 0) throw DomainError("RamanujanParams: k must be non-negative");
  if (!(alpha >= -1.0 + 1e-6 && alpha <= 0.0))
    throw DomainError("RamanujanParams: requires -1 < alpha <= 0");
  return {t, k, alpha};
}

QuadratureResult N_k_estimate(const RamanujanParams& raw, const QuadratureConfig& cfg) {
  const RamanujanParams p = RamanujanParams::make(raw.t, raw.k, raw.alpha);
  const double t = p.t;
  const double alpha = p.alpha;
  const int k = p.k;
  const double order = k + 1.0;
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  const auto integrand = [=](double y) {
    // With phi = pi - Arg(y + i pi) = atan2(pi, -y):
    //   sin[alpha pi + (k+1) Arg] = (-1)^{k+1} sin[alpha pi - (k+1) phi],
    // which stays accurate as y -> -inf where phi -> 0.
    const double phi = std::atan2(kPi, -y);
    const double numerator = sign * std::sin(alpha * kPi - order * phi);
    const double damping = std::exp(-t * std::exp(y) - alpha * y);
    return damping * numerator / (kPi * std::pow(y * y + kPi * kPi, 0.5 * order));
  };
  return integrate_log_variable(integrand, t, cfg);
}

double N_k(const RamanujanParams& p, const QuadratureConfig& cfg) { return N_k_estimate(p, cfg).value; }

double N_k(double t, int k, double alpha, const QuadratureConfig& cfg) {
  return N_k(RamanujanParams{t, k, alpha}, cfg);
}

QuadratureResult N_classic_estimate(double t, const QuadratureConfig& cfg) {
  require_positive_t(t, "N_classic");
  return integrate_log_variable(
      [t](double y) { return std::exp(-t * std::exp(y)) / (y * y + kPi * kPi); }, t, cfg);
}

double N_classic(double t, const QuadratureConfig& cfg) { return N_classic_estimate(t, cfg).value; }

double N_k_special(double t, int k, const QuadratureConfig& cfg) {
  require_positive_t(t, "N_k_special");
  const double pi2 = kPi * kPi;
  RealFunction integrand;
  switch (k) {
    case 1:
      integrand = [=](double y) {
        const double q = y * y + pi2;
        return 2.0 * std::exp(-t * std::exp(y)) * y / (q * q);
      };
      break;
    case 2:
      integrand = [=](double y) {
        const double q = y * y + pi2;
        return std::exp(-t * std::exp(y)) * (3.0 * y * y - pi2) / (q * q * q);
      };
      break;
    case 3:
      integrand = [=](double y) {
        const double q = y * y + pi2;
        return 4.0 * std::exp(-t * std::exp(y)) * y * (y * y - pi2) / (q * q * q * q);
      };
      break;
    default:
      throw DomainError("N_k_special: k must be 1, 2 or 3");
  }
  return integrate_log_variable(integrand, t, cfg).value;
}

double wood_derivative(double t, int n, const QuadratureConfig& cfg) {
  require_positive_t(t, "wood_derivative");
  if (n < 0) throw DomainError("wood_derivative: n must be non-negative");
  const double log_t = std::log(t);
  // 1/Gamma(u+1) vanishes at u = -1, -2, ..., so the integrand is smooth there.
  const auto integrand = [=](double u) { return power_over_gamma(log_t, u, u + 1.0); };
  double integral = integrate_semiinfinite(integrand, 0.0, cfg).value;
  if (n > 0) integral += integrate_finite(integrand, -double(n), 0.0, cfg).value;
  return std::exp(t) - integral;
}

QuadratureResult mu_via_identity_estimate(double t, int k, double alpha, const QuadratureConfig& cfg) {
  QuadratureResult n = N_k_estimate(RamanujanParams{t, k, alpha}, cfg);
  n.value = residue_at_one(t, k, alpha) - n.value;
  return n;
}

double mu_via_identity(double t, int k, double alpha, const QuadratureConfig& cfg) {
  return mu_via_identity_estimate(t, k, alpha, cfg).value;
}

}  // namespace volterra
