#ifndef XIML_ERRORS_HPP
#define XIML_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ximl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or too close to) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested order is outside what the operation implements.
class UnsupportedOrderError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numeric procedure could not reach its accuracy target or left the
/// finite range. Carries the best value found so far, when there is one.
class AccuracyError : public Error {
 public:
  explicit AccuracyError(const std::string& what, std::string best_value = {},
                         std::string error_bound = {})
      : Error(what), best_value_(std::move(best_value)), error_bound_(std::move(error_bound)) {}

  const std::string& best_value() const { return best_value_; }
  const std::string& error_bound() const { return error_bound_; }

 private:
  std::string best_value_;
  std::string error_bound_;
};

/// Leading coefficient vanished under the zero tolerance.
class DegeneracyError : public AccuracyError {
 public:
  using AccuracyError::AccuracyError;
};

/// Malformed input text (tables, zero files, command arguments).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, long line = -1) : Error(what), line_(line) {}
  /// 1-based line (or row) number, -1 when not applicable.
  long line() const { return line_; }

 private:
  long line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ximl

#endif  // XIML_ERRORS_HPP
