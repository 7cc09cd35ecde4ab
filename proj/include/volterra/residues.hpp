#pragma once

#include <vector>

namespace volterra {

/// Polynomial with real coefficients stored in ascending order c_0 .. c_d.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  /// Horner evaluation.
  double operator()(double t) const;

 private:
  std::vector<double> coeffs_;
};

/// Coefficients v_0 .. v_n of (w / ln(1+w))^(k+1), from Miller's recurrence
/// for powers of a power series.
std::vector<double> miller_v(int k, int n);

/// Coefficients c_0 .. c_n of M(s,k,alpha) (s-1)^(k+1) expanded about s = 1.
std::vector<double> series_c(int k, double alpha, int n);

/// P_k with Res(e^{st} M(s,k,alpha), s = 1) = e^t P_k(t) / k!.
RealPolynomial residue_polynomial(int k, double alpha);

/// e^t P_k(t) / k!. Throws OverflowError if the value is not representable.
double residue_at_one(double t, int k, double alpha);

}  // namespace volterra
