#pragma once

#include <stdexcept>
#include <string>

namespace polydisc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (wrong degree, zero discriminant,
// non-primitive input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed polynomial or record text.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numeric decision could not be certified at the working precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public DomainError {
 public:
  using DomainError::DomainError;
};

// A mathematical identity that must hold failed; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydisc
