#ifndef FREEVL_ERRORS_HPP
#define FREEVL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freevl {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. Carries the byte offset of the offending
/// token and a description of what would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position,
              std::string expected)
      : Error(message + " at position " + std::to_string(position) +
              " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Operands live in spaces of different dimension.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A span of functionals does not separate the ambient space.
class NotSeparatingError : public Error {
 public:
  using Error::Error;
};

/// An elimination blew past its configured intermediate-size cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A label that is not a member of the generating set.
class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

/// A polyhedral ball violating its representation invariants.
class MalformedBallError : public Error {
 public:
  using Error::Error;
};

}  // namespace freevl

#endif  // FREEVL_ERRORS_HPP
