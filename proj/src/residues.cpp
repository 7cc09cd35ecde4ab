#include "volterra/residues.hpp"

#include <cmath>
#include <sstream>

#include "volterra/errors.hpp"
#include "volterra/scalar.hpp"

namespace volterra {

RealPolynomial::RealPolynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double RealPolynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<double> miller_v(int k, int n) {
  if (k < 0 || n < 0) throw DomainError("miller_v: k and n must be non-negative");
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  v[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) {
      const double sign = (j % 2 == 1) ? 1.0 : -1.0;
      acc += (double(k) * j / m + 1.0) * sign * v[m - j] / (j + 1);
    }
    v[m] = acc;
  }
  return v;
}

std::vector<double> series_c(int k, double alpha, int n) {
  const std::vector<double> v = miller_v(k, n);
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 0; m <= n; ++m) {
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) acc += binomial(-alpha - 1.0, j) * v[m - j];
    c[m] = acc;
  }
  return c;
}

RealPolynomial residue_polynomial(int k, double alpha) {
  if (k < 0) throw DomainError("residue_polynomial: k must be non-negative");
  const std::vector<double> c = series_c(k, alpha, k);
  // p_{k-j} = c_j k! / (k-j)!  is the coefficient of t^{k-j}.
  std::vector<double> ascending(static_cast<std::size_t>(k) + 1, 0.0);
  double falling = 1.0;  // k! / (k-j)!
  for (int j = 0; j <= k; ++j) {
    ascending[k - j] = c[j] * falling;
    falling *= k - j;
  }
  return RealPolynomial(std::move(ascending));
}

double residue_at_one(double t, int k, double alpha) {
  const RealPolynomial p = residue_polynomial(k, alpha);
  const double value = std::exp(t) * p(t) / std::tgamma(k + 1.0);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "residue_at_one: e^t P_k(t)/k! overflows for t = " << t << ", k = " << k;
    throw OverflowError(msg.str());
  }
  return value;
}

}  // namespace volterra
