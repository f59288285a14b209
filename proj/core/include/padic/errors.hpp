#ifndef PADIC_ERRORS_HPP
#define PADIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (mixed primes, bad
/// dimensions, out-of-range configuration values, non-prime modulus).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (dataset/model files, number encodings).
/// Carries the 1-based line number when the source is a multi-line file,
/// 0 otherwise.
class FormatError : public Error {
public:
  explicit FormatError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Numeric failure: division by (indistinguishable-from) zero, a matrix
/// singular at working precision, or a precision budget too small for the
/// requested operation.
class NumericError : public Error {
public:
  using Error::Error;
};

}  // namespace padic

#endif
