#pragma once

#include <stdexcept>
#include <string>

namespace gfa {

/// Base of every error the library raises. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input documents, schema violations, invariant violations on construction.
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// Arithmetic that is undefined in the active scalar domain (non-unit division,
/// singular denominators, unsupported domain for an operation).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Input exceeds the exact-search or dense-storage cap of an operation.
class SizeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "size"; }
};

/// Caller violated an operation's precondition (bad index, missing gamma weights, ...).
class ContractError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract"; }
};

}  // namespace gfa
