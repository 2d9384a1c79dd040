#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace lievol {

// Rank/family combination that does not name a simple Lie algebra.
class InvalidTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Overflow of an intermediate quantity; carries the offending abscissa.
class RangeError : public std::range_error {
 public:
  RangeError(const std::string& what, double x) : std::range_error(what), x_(x) {}
  double abscissa() const noexcept { return x_; }

 private:
  double x_;
};

// An integrand returned a non-finite sample.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(double x)
      : std::runtime_error(describe(x)), x_(x) {}
  double abscissa() const noexcept { return x_; }

 private:
  static std::string describe(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at x = " << x;
    return os.str();
  }
  double x_;
};

// Quadrature did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure, e.g. a non-positive sinc factor.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lievol
