#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical route failed to produce a value at the requested accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Quadrature stopped before meeting its tolerance. The best estimate
/// reached so far is retained.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double best_value, double best_error)
      : NumericalError(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

/// Round-off amplification makes the requested tolerance unreachable in
/// double precision.
class ToleranceUnachievable : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace volterra
