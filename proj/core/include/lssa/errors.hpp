#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lssa {

enum class ErrorKind {
  Domain,
  Usage,
  SingularFit,
  Data,
  Calibration,
  Extrapolation,
  Convergence,
};

/// Base class for every error raised by the toolkit. The kind selects the
/// command-line exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

/// The caller violated an operation's usage contract (too few samples,
/// empty lists, degenerate grids).
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

/// The least-squares design matrix is rank deficient.
class SingularFitError : public Error {
public:
  explicit SingularFitError(const std::string& what)
      : Error(ErrorKind::SingularFit, what) {}
};

/// Malformed input file or configuration. `line` is 1-based, 0 when the
/// error is not tied to a line.
class DataError : public Error {
public:
  DataError(const std::string& what, std::size_t line = 0)
      : Error(ErrorKind::Data, line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class CalibrationError : public Error {
public:
  explicit CalibrationError(const std::string& what)
      : Error(ErrorKind::Calibration, what) {}
};

/// A tabulated relation was queried outside its abscissa range.
class ExtrapolationError : public Error {
public:
  explicit ExtrapolationError(const std::string& what)
      : Error(ErrorKind::Extrapolation, what) {}
};

class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::Convergence, what) {}
};

} // namespace lssa
