#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "volterra/scalar.hpp"

namespace volterra {

enum class CoefficientKind { generic_taylor, D_alpha, D_alpha_beta, E_alpha_beta, ramanujan };

/// Expansion coefficients together with the Cauchy circle that produced them.
struct CoefficientSeries {
  std::vector<double> values;
  double radius = 0.5;
  int node_count = 0;
  CoefficientKind kind = CoefficientKind::generic_taylor;
  /// Largest |Im| left in the trapezoidal sums, relative to max(1, |value|).
  double imag_residual = 0.0;

  double operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

using ComplexFunction = std::function<Complex(Complex)>;

/// Default node count max(64, 8 (n + 1)).
int default_cauchy_nodes(int n);

/// Raw derivatives F^(n)(0), n = 0..n_max, from the trapezoidal rule on the
/// circle |x| = rho with `nodes` equispaced points:
///   F_n ~ n! / (K rho^n) sum_k e^{-i theta_k n} F(rho e^{i theta_k}).
/// F must be analytic on the closed disc. Throws NumericalError when F is
/// not finite somewhere on the circle.
CoefficientSeries taylor_coeffs_cauchy(const ComplexFunction& f, int n_max, double rho, int nodes);

/// D_n^(alpha) = (1/n!) d^n/dx^n 1/Gamma(alpha + x + 1) at 0, n = 0..n_max.
/// Results are memoised per process and shared between threads.
std::shared_ptr<const CoefficientSeries> coeff_D(double alpha, int n_max);
std::shared_ptr<const CoefficientSeries> coeff_D(double alpha, int n_max, double rho, int nodes);

/// D_n^(alpha,beta) = (beta+1)_n D_n^(alpha).
std::shared_ptr<const CoefficientSeries> coeff_D_ab(double alpha, double beta, int n_max);

/// E_n^(alpha,beta) = ((-1)^n / n!) d^n/dx^n G(x) at 0 with
/// G(x) = (1-x)^{-alpha-1} ((-x) / log(1-x))^{beta+1}.
std::shared_ptr<const CoefficientSeries> coeff_E(double alpha, double beta, int n_max);
std::shared_ptr<const CoefficientSeries> coeff_E(double alpha, double beta, int n_max, double rho,
                                                 int nodes);

/// Coefficients of the large-t expansion of the Ramanujan function:
/// 1/Gamma(1 - x) = sum D_n x^n / n!.
std::shared_ptr<const CoefficientSeries> coeff_ramanujan(int n_max);

/// Small-argument truncation t^alpha sum_{n<=N} D_n^(alpha,beta) (log 1/t)^{-beta-1-n},
/// 0 < t < 1.
double mu_small(double t, double beta, double alpha, int n_terms);

struct LargeArgumentExpansion {
  double e_part = 0.0;
  double h_part = 0.0;
  /// H is only formed when -beta-1-n is an integer; for other beta the
  /// power of the negative number log(1/t) has no real value and H is left
  /// out (it is exponentially small against E on the positive axis).
  bool h_included = false;
  double value() const { return e_part + h_part; }
};

/// e^t sum_{n<=N} E_n t^{beta-n} / Gamma(beta+1-n)  +  H_N(t),  t > 1.
LargeArgumentExpansion mu_large_parts(double t, double beta, double alpha, int n_terms);
double mu_large(double t, double beta, double alpha, int n_terms);

/// The exponential part E(t, beta, alpha) truncated after n_terms + 1 terms.
double exponential_part(double t, double beta, double alpha, int n_terms);

/// mu(t, -n-1, alpha) = t^alpha sum_{k=0}^{n} (-n)_k D_k^(alpha) (log 1/t)^{n-k}
/// (the k = n+1 term vanishes). Exact up to coefficient accuracy.
double mu_negint_expansion(double t, int n, double alpha);

/// N(t) ~ (1/log t) sum_{n<=N} D_n / (log t)^n, t > e.
double ramanujan_expansion(double t, int n_terms);

/// Large-t expansion of N_k(t, alpha) obtained from N_k = -H(t, k, alpha):
///   N_k(t, alpha) ~ -t^alpha sum_{n<=N} D_n^(alpha,k) (log 1/t)^{-k-1-n}.
/// Empirical only; never used as an evaluation route.
double nk_expansion_conjecture(double t, int k, double alpha, int n_terms);

}  // namespace volterra
