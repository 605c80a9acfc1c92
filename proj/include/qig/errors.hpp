#pragma once

#include <stdexcept>
#include <string>

namespace qig {

/// Nonpositive kernel argument or a value outside a function's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Builtin metric parameter outside its documented range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requires a regular metric (positive metric constant).
class RegularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requires a strictly positive definite state.
class PositivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimensions do not match.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested tabulated data (measure, h-representation) does not exist
/// for the given metric.
class UnsupportedMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget. Carries the
/// error estimate that was actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error_(achieved) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Analytic continuation produced a non-finite or branch-inconsistent value.
class ContinuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric result violated an exact-arithmetic sign constraint by more
/// than the clamping tolerance; indicates a bug, not roundoff.
class NumericError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed matrix or report file. Carries a 1-based line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qig
