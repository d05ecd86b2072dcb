#pragma once

#include <stdexcept>
#include <string>

namespace indigenous {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element, polynomial or series belongs to a different S_k than the
/// structure it was handed to.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was asked for a k above its configured bound.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, unsigned requested, unsigned bound)
      : Error(what + ": k = " + std::to_string(requested) +
              " exceeds the exhaustive bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  unsigned requested() const noexcept { return requested_; }
  unsigned bound() const noexcept { return bound_; }

 private:
  unsigned requested_;
  unsigned bound_;
};

/// Malformed text input (elements, polynomials, element lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold (e.g. U not multiplicatively
/// closed, a0 outside {1, m}).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace indigenous
