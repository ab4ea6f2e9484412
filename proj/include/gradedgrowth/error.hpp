#pragma once

#include <stdexcept>
#include <string>

namespace gradedgrowth {

/// Base of every error the library raises. The CLI maps each subclass
/// to a fixed process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

class UsageError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// Malformed word, presentation or file.
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// A configured size/memory budget would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// A precondition of an operation does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

/// An element or length was requested outside the computed region
/// (e.g. a ball that is too small). Never answered by guessing.
class OutOfRangeError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// A bounded search ended without finding what it looked for. This
/// never implies that the object does not exist.
class SearchFailure : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
};

}  // namespace gradedgrowth
