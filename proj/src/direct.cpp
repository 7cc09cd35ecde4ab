#include "volterra/direct.hpp"

#include <cmath>
#include <sstream>

#include "volterra/asymptotics.hpp"
#include "volterra/errors.hpp"
#include "volterra/scalar.hpp"

namespace volterra {

VolterraParams VolterraParams::make(double t, double beta, double alpha) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("VolterraParams: t must be positive and finite");
  return {t, beta, alpha};
}

bool VolterraParams::beta_is_integer() const { return is_nonnegative_integer(beta); }

QuadratureResult mu_direct_estimate(const VolterraParams& p, const QuadratureConfig& cfg) {
  if (!(p.t > 0.0)) throw DomainError("mu_direct: requires t > 0");
  if (!(p.alpha > -1.0)) throw DomainError("mu_direct: requires alpha > -1");
  if (!(p.beta + 1.0 >= kMinShiftedParameter)) throw DomainError("mu_direct: requires beta > -1");

  const double t = p.t;
  const double alpha = p.alpha;
  const double beta = p.beta;
  const double prefactor = recip_gamma(beta + 1.0);
  const double log_t = std::log(t);
  const auto integrand = [=](double u) {
    const double power = beta == 0.0 ? 1.0 : std::pow(u, beta);
    return prefactor * power * power_over_gamma(log_t, u + alpha, u + alpha + 1.0);
  };
  return integrate_semiinfinite(integrand, 0.0, cfg);
}

double mu_direct(const VolterraParams& p, const QuadratureConfig& cfg) {
  return mu_direct_estimate(p, cfg).value;
}

double mu_direct(double t, double beta, double alpha, const QuadratureConfig& cfg) {
  return mu_direct(VolterraParams{t, beta, alpha}, cfg);
}

double nu(double t, const QuadratureConfig& cfg) { return mu_direct(t, 0.0, 0.0, cfg); }

double nu_alpha(double t, double alpha, const QuadratureConfig& cfg) {
  return mu_direct(t, 0.0, alpha, cfg);
}

double mu_beta(double t, double beta, const QuadratureConfig& cfg) {
  return mu_direct(t, beta, 0.0, cfg);
}

double mu_negative_integer_beta(double t, int n, double alpha) {
  if (!(t > 0.0)) throw DomainError("mu_negative_integer_beta: requires t > 0");
  if (n < 0) throw DomainError("mu_negative_integer_beta: n must be non-negative");
  if (!(alpha > -1.0)) throw DomainError("mu_negative_integer_beta: requires alpha > -1");
  const double log_t = std::log(t);
  const auto g = [=](Complex x) {
    return std::exp((alpha + x) * log_t) * recip_gamma(Complex(alpha + 1.0) + x);
  };
  const double rho = n > 12 ? 0.75 : 0.5;
  const CoefficientSeries derivs = taylor_coeffs_cauchy(g, n, rho, default_cauchy_nodes(n));
  return (n % 2 == 0 ? 1.0 : -1.0) * derivs[static_cast<std::size_t>(n)];
}

QuadratureResult nu_dot_estimate(double t, const QuadratureConfig& cfg) {
  if (!(t > 0.0)) throw DomainError("nu_dot: requires t > 0");
  const double log_t = std::log(t);
  // 1/Gamma(0) = 0, so the integrand vanishes at u = 0.
  const auto integrand = [=](double u) { return power_over_gamma(log_t, u - 1.0, u); };
  return integrate_semiinfinite(integrand, 0.0, cfg);
}

double nu_dot(double t, const QuadratureConfig& cfg) { return nu_dot_estimate(t, cfg).value; }

}  // namespace volterra
