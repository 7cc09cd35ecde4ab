#pragma once

#include <complex>
#include <numbers>

namespace volterra {

using Complex = std::complex<double>;

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.5772156649015329;
}  // namespace constants

/// sin(pi x) and cos(pi x) with exact argument reduction, so that zeros at
/// the integers are reproduced without the rounding of pi * x.
double sin_pi(double x);
double cos_pi(double x);

/// 1/Gamma(x). Exactly zero at the poles x = 0, -1, -2, ...
double recip_gamma(double x);

/// 1/Gamma(z) for complex z (entire function).
Complex recip_gamma(Complex z);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// e^{p log_base} / Gamma(x), formed in log space when either factor
/// would leave the double range.
double power_over_gamma(double log_base, double p, double x);

/// ln|s| + i Arg(s) with Arg in (-pi, pi]. The negative real axis maps to
/// Arg = +pi regardless of the sign of a zero imaginary part.
/// Throws DomainError for s = 0.
Complex principal_log(Complex s);

/// |s|^p exp(i p Arg(s)) on the principal branch. 0^p = 0 for p > 0;
/// throws DomainError for s = 0 and p <= 0.
Complex complex_power(Complex s, double p);

/// Generalised binomial coefficient binom(a, j) by the product formula.
double binomial(double a, int j);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
double rising_factorial(double a, int n);

bool is_nonnegative_integer(double x, double tol = 1e-12);

}  // namespace volterra
