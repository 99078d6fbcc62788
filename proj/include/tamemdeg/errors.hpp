#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamemdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the numeric arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text; `position` is the 1-based column of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error("parse error at column " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Internal consistency check failed (a constructed object did not verify).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tamemdeg
