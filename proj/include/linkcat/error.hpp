#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkcat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: index out of range, overlapping links, bad size.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two morphisms whose shared object does not match.
class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the shape of the input is not met (e.g. loops passed
/// to a loopless operation, an enumeration cap exceeded).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Something the theory says cannot happen did happen. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Text input that does not parse. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace linkcat
