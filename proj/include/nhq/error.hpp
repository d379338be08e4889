#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nhq {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed quiver file or expression. Carries a location string
/// ("arrows[2].from", "column 14") when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location = {})
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Dimension vector or matrix index out of bounds or inconsistent.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operands built over different quivers or representation spaces.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Inputs violate a composability or marking precondition.
class CompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace nhq
