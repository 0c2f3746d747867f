#pragma once

#include <stdexcept>
#include <string>

namespace regkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. The message names the offending line or byte.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Bad numeric parameter (non-prime characteristic, s = 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A result contradicted a proven identity; always an engine bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Shipped data did not match its recorded checksum.
class ChecksumError : public Error {
 public:
  using Error::Error;
};

}  // namespace regkit
