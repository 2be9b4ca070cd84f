#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydecomp {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text, problem file, or serialized document.
/// `position` is a 0-based character offset into the offending text.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class SingularMatrix : public Error {
  public:
    using Error::Error;
};

class EmptyInput : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A cross-block monomial survived variable separation.
class MixedMonomial : public Error {
  public:
    using Error::Error;
};

/// Raised when an exactly-checked postcondition fails. Indicates a bug.
class InternalInvariantViolation : public Error {
  public:
    using Error::Error;
};

} // namespace polydecomp
