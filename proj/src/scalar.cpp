#include "volterra/scalar.hpp"

#include <array>
#include <cmath>

#include "volterra/errors.hpp"

namespace volterra {
namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kSqrt2Pi = std::sqrt(2.0 * constants::pi);

template <typename T>
T lanczos_sum(T x) {
  T acc = T(kLanczos[0]);
  for (std::size_t k = 1; k < kLanczos.size(); ++k) acc += kLanczos[k] / (x + double(k));
  return acc;
}

// 1/Gamma(x + 1) for x >= -0.5.
double recip_gamma_shifted(double x) {
  const double base = x + kLanczosG + 0.5;
  if (x < 120.0) {
    return std::exp(base) / (kSqrt2Pi * std::pow(base, x + 0.5) * lanczos_sum(x));
  }
  const double log_gamma =
      (x + 0.5) * std::log(base) - base + std::log(kSqrt2Pi * lanczos_sum(x));
  return std::exp(-log_gamma);
}

Complex recip_gamma_shifted(Complex x) {
  const Complex base = x + kLanczosG + 0.5;
  const Complex log_gamma =
      (x + 0.5) * std::log(base) - base + std::log(kSqrt2Pi * lanczos_sum(x));
  return std::exp(-log_gamma);
}

Complex sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double py = constants::pi * y;
  return {volterra::sin_pi(x) * std::cosh(py), volterra::cos_pi(x) * std::sinh(py)};
}

// Reduce x into [-1, 1] modulo 2 without rounding.
double reduce_mod2(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  else if (r > 1.0) r -= 2.0;
  return r;
}

}  // namespace

double sin_pi(double x) {
  double r = reduce_mod2(x);
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(constants::pi * r);
}

double cos_pi(double x) {
  const double a = std::abs(reduce_mod2(x));
  if (a <= 0.25) return std::cos(constants::pi * a);
  if (a <= 0.75) return std::sin(constants::pi * (0.5 - a));
  return -std::cos(constants::pi * (1.0 - a));
}

double recip_gamma(double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x >= 0.5) return recip_gamma_shifted(x - 1.0);
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
  return sin_pi(x) / (constants::pi * recip_gamma_shifted(-x));
}

Complex recip_gamma(Complex z) {
  if (z.imag() == 0.0) return recip_gamma(z.real());
  if (z.real() >= 0.5) return recip_gamma_shifted(z - 1.0);
  return sin_pi(z) / (constants::pi * recip_gamma_shifted(-z));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
  if (x < 0.5) return std::log(constants::pi / sin_pi(x)) - log_gamma(1.0 - x);
  const double y = x - 1.0;
  const double base = y + kLanczosG + 0.5;
  return (y + 0.5) * std::log(base) - base + std::log(kSqrt2Pi * lanczos_sum(y));
}

double power_over_gamma(double log_base, double p, double x) {
  const double power = std::exp(p * log_base);
  if (x < 160.0 && std::isfinite(power) && power > 1e-290) return power * recip_gamma(x);
  if (x <= 0.0) {
    if (x == std::floor(x)) return 0.0;
    return power * recip_gamma(x);
  }
  return std::exp(p * log_base - log_gamma(x));
}

Complex principal_log(Complex s) {
  if (s == Complex(0.0, 0.0)) throw DomainError("principal_log: argument is zero");
  if (s.imag() == 0.0 && s.real() < 0.0) return {std::log(-s.real()), constants::pi};
  return std::log(s);
}

Complex complex_power(Complex s, double p) {
  if (s == Complex(0.0, 0.0)) {
    if (p <= 0.0) throw DomainError("complex_power: zero base with non-positive exponent");
    return {0.0, 0.0};
  }
  if (p == 1.0) return s;
  const Complex log_s = principal_log(s);
  const double modulus = std::exp(p * log_s.real());
  const double phase = p * log_s.imag();
  return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

double binomial(double a, int j) {
  double acc = 1.0;
  for (int i = 0; i < j; ++i) acc *= (a - i) / (i + 1);
  return acc;
}

double rising_factorial(double a, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= a + i;
  return acc;
}

bool is_nonnegative_integer(double x, double tol) {
  return x > -tol && std::abs(x - std::round(x)) <= tol;
}

}  // namespace volterra
