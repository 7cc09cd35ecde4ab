#include "volterra/asymptotics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "volterra/errors.hpp"

namespace volterra {
namespace {

// Circle radius: 1/2 is enough for low orders; higher orders need a larger
// circle to keep n!/rho^n round-off amplification in check. E stays < 1.
double default_radius(int n_max) { return n_max > 12 ? 0.75 : 0.5; }

using CacheKey = std::tuple<int, double, double, int, double, int>;

class SeriesCache {
 public:
  template <typename Build>
  std::shared_ptr<const CoefficientSeries> get(const CacheKey& key, Build&& build) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto series = std::make_shared<const CoefficientSeries>(build());
    std::lock_guard<std::mutex> lock(mutex_);
    // Another thread may have published first; keep the first one.
    return entries_.emplace(key, std::move(series)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<CacheKey, std::shared_ptr<const CoefficientSeries>> entries_;
};

SeriesCache& cache() {
  static SeriesCache instance;
  return instance;
}

CacheKey key_of(CoefficientKind kind, double alpha, double beta, int n, double rho, int nodes) {
  return {static_cast<int>(kind), alpha, beta, n, rho, nodes};
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

int default_cauchy_nodes(int n) { return std::max(64, 8 * (n + 1)); }

CoefficientSeries taylor_coeffs_cauchy(const ComplexFunction& f, int n_max, double rho, int nodes) {
  require(n_max >= 0, "taylor_coeffs_cauchy: n_max must be non-negative");
  require(rho > 0.0, "taylor_coeffs_cauchy: radius must be positive");
  require(nodes >= 4 * (n_max + 1), "taylor_coeffs_cauchy: need at least 4 (n_max + 1) nodes");

  // Roots of unity exp(-2 pi i m / K) with exactly reduced angles.
  std::vector<Complex> roots(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) {
    const double turns = 2.0 * m / nodes;
    roots[m] = {cos_pi(turns), -sin_pi(turns)};
  }
  std::vector<Complex> samples(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) {
    const Complex x = rho * std::conj(roots[m]);
    samples[m] = f(x);
    if (!std::isfinite(samples[m].real()) || !std::isfinite(samples[m].imag())) {
      std::ostringstream msg;
      msg << "taylor_coeffs_cauchy: function is not finite at x = " << x
          << " (not analytic on the circle of radius " << rho << ")";
      throw NumericalError(msg.str());
    }
  }

  CoefficientSeries out;
  out.radius = rho;
  out.node_count = nodes;
  out.values.resize(static_cast<std::size_t>(n_max) + 1);
  double scale = 1.0;  // n! / rho^n
  for (int n = 0; n <= n_max; ++n) {
    Complex sum = 0.0;
    for (int m = 0; m < nodes; ++m) {
      const auto index = static_cast<std::size_t>((static_cast<long long>(m) * n) % nodes);
      sum += roots[index] * samples[m];
    }
    const Complex derivative = sum * (scale / nodes);
    out.values[n] = derivative.real();
    out.imag_residual = std::max(out.imag_residual,
                                 std::abs(derivative.imag()) / std::max(1.0, std::abs(derivative.real())));
    scale *= (n + 1) / rho;
  }
  return out;
}

std::shared_ptr<const CoefficientSeries> coeff_D(double alpha, int n_max, double rho, int nodes) {
  require(alpha > -1.0, "coeff_D: alpha must exceed -1");
  return cache().get(key_of(CoefficientKind::D_alpha, alpha, 0.0, n_max, rho, nodes), [&] {
    CoefficientSeries s = taylor_coeffs_cauchy(
        [alpha](Complex x) { return recip_gamma(Complex(alpha + 1.0) + x); }, n_max, rho, nodes);
    double factorial = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) factorial *= n;
      s.values[n] /= factorial;
    }
    s.kind = CoefficientKind::D_alpha;
    return s;
  });
}

std::shared_ptr<const CoefficientSeries> coeff_D(double alpha, int n_max) {
  return coeff_D(alpha, n_max, default_radius(n_max), default_cauchy_nodes(n_max));
}

std::shared_ptr<const CoefficientSeries> coeff_D_ab(double alpha, double beta, int n_max) {
  require(beta > -1.0, "coeff_D_ab: beta must exceed -1");
  const double rho = default_radius(n_max);
  const int nodes = default_cauchy_nodes(n_max);
  return cache().get(key_of(CoefficientKind::D_alpha_beta, alpha, beta, n_max, rho, nodes), [&] {
    CoefficientSeries s = *coeff_D(alpha, n_max, rho, nodes);
    for (int n = 0; n <= n_max; ++n) s.values[n] *= rising_factorial(beta + 1.0, n);
    s.kind = CoefficientKind::D_alpha_beta;
    return s;
  });
}

std::shared_ptr<const CoefficientSeries> coeff_E(double alpha, double beta, int n_max, double rho,
                                                 int nodes) {
  require(alpha > -1.0, "coeff_E: alpha must exceed -1");
  require(beta > -1.0, "coeff_E: beta must exceed -1");
  require(rho < 1.0, "coeff_E: radius must stay below the singularity at x = 1");
  return cache().get(key_of(CoefficientKind::E_alpha_beta, alpha, beta, n_max, rho, nodes), [&] {
    const auto generating = [alpha, beta](Complex x) {
      const Complex log_1mx = std::log(Complex(1.0) - x);
      // (-x)/log(1-x) -> 1 at x = 0 and has positive real part on |x| < 1,
      // so one principal power covers both factors of the original quotient.
      const Complex ratio = -x / log_1mx;
      return std::exp((-alpha - 1.0) * log_1mx + (beta + 1.0) * principal_log(ratio));
    };
    CoefficientSeries s = taylor_coeffs_cauchy(generating, n_max, rho, nodes);
    double factorial = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) factorial *= n;
      s.values[n] *= ((n % 2 == 0) ? 1.0 : -1.0) / factorial;
    }
    s.kind = CoefficientKind::E_alpha_beta;
    return s;
  });
}

std::shared_ptr<const CoefficientSeries> coeff_E(double alpha, double beta, int n_max) {
  return coeff_E(alpha, beta, n_max, default_radius(n_max), default_cauchy_nodes(n_max));
}

std::shared_ptr<const CoefficientSeries> coeff_ramanujan(int n_max) {
  const double rho = default_radius(n_max);
  const int nodes = default_cauchy_nodes(n_max);
  return cache().get(key_of(CoefficientKind::ramanujan, 0.0, 0.0, n_max, rho, nodes), [&] {
    CoefficientSeries s = taylor_coeffs_cauchy(
        [](Complex x) { return recip_gamma(Complex(1.0) - x); }, n_max, rho, nodes);
    s.kind = CoefficientKind::ramanujan;
    return s;
  });
}

double mu_small(double t, double beta, double alpha, int n_terms) {
  require(t > 0.0 && t < 1.0, "mu_small: requires 0 < t < 1");
  require(n_terms >= 0, "mu_small: number of terms must be non-negative");
  const auto d = coeff_D_ab(alpha, beta, n_terms);
  const double log_inv = std::log(1.0 / t);
  double sum = 0.0;
  for (int n = 0; n <= n_terms; ++n) sum += (*d)[n] * std::pow(log_inv, -beta - 1.0 - n);
  return std::pow(t, alpha) * sum;
}

double exponential_part(double t, double beta, double alpha, int n_terms) {
  require(t > 0.0, "exponential_part: requires t > 0");
  const auto e = coeff_E(alpha, beta, n_terms);
  const double log_t = std::log(t);
  double sum = 0.0;
  for (int n = 0; n <= n_terms; ++n) {
    const double rg = recip_gamma(beta + 1.0 - n);
    if (rg == 0.0) continue;
    sum += (*e)[n] * rg * std::exp(t + (beta - n) * log_t);
  }
  return sum;
}

LargeArgumentExpansion mu_large_parts(double t, double beta, double alpha, int n_terms) {
  require(t > 1.0, "mu_large: requires t > 1");
  require(n_terms >= 0, "mu_large: number of terms must be non-negative");
  LargeArgumentExpansion out;
  out.e_part = exponential_part(t, beta, alpha, n_terms);
  if (is_nonnegative_integer(beta)) {
    const auto d = coeff_D_ab(alpha, beta, n_terms);
    const double log_inv = std::log(1.0 / t);  // negative
    const double k = std::round(beta);
    double sum = 0.0;
    for (int n = 0; n <= n_terms; ++n) sum += (*d)[n] * std::pow(log_inv, -k - 1.0 - n);
    out.h_part = std::pow(t, alpha) * sum;
    out.h_included = true;
  }
  return out;
}

double mu_large(double t, double beta, double alpha, int n_terms) {
  return mu_large_parts(t, beta, alpha, n_terms).value();
}

double mu_negint_expansion(double t, int n, double alpha) {
  require(t > 0.0, "mu_negint_expansion: requires t > 0");
  require(n >= 0, "mu_negint_expansion: n must be non-negative");
  const auto d = coeff_D(alpha, n + 1);
  const double log_inv = std::log(1.0 / t);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += rising_factorial(-double(n), k) * (*d)[k] * std::pow(log_inv, n - k);
  return std::pow(t, alpha) * sum;
}

double ramanujan_expansion(double t, int n_terms) {
  require(t > std::exp(1.0), "ramanujan_expansion: requires t > e");
  require(n_terms >= 0, "ramanujan_expansion: number of terms must be non-negative");
  const auto d = coeff_ramanujan(n_terms);
  const double log_t = std::log(t);
  double sum = 0.0;
  for (int n = n_terms; n >= 0; --n) sum = sum / log_t + (*d)[n];
  return sum / log_t;
}

double nk_expansion_conjecture(double t, int k, double alpha, int n_terms) {
  require(t > 1.0, "nk_expansion_conjecture: requires t > 1");
  require(k >= 0, "nk_expansion_conjecture: k must be non-negative");
  require(alpha > -1.0 && alpha <= 0.0, "nk_expansion_conjecture: requires -1 < alpha <= 0");
  const auto d = coeff_D_ab(alpha, double(k), n_terms);
  const double log_inv = std::log(1.0 / t);
  double sum = 0.0;
  for (int n = 0; n <= n_terms; ++n) sum += (*d)[n] * std::pow(log_inv, -k - 1.0 - n);
  return -std::pow(t, alpha) * sum;
}

}  // namespace volterra
