#pragma once

#include <stdexcept>
#include <string>

namespace extensor {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition on an argument (bad degree, dead handle, id out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but exceeds what this build supports (dimension cap, field size).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Malformed or truncated serialized state.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Serialized state written by an incompatible format version.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace extensor
