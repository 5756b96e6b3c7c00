#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumpdet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed function-spec text. Carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Unknown function name or wrong argument count in an expression.
class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Point or breakpoint outside the function domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid numeric parameter (p < 1, alpha <= -1, r out of range, bad Lambda...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Coefficient index outside 1..K (or truncation order above the series length).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A-posteriori quadrature check failed.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// Chebyshev estimator evaluated at (or too close to) x = +-1.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation paths disagree beyond their combined error bound.
class PathDisagreementError : public Error {
 public:
  using Error::Error;
};

}  // namespace jumpdet
