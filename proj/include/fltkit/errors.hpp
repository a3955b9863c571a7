#pragma once

#include <stdexcept>
#include <string>

namespace fltkit {

/// Base class for all fltkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition (bad argument, malformed text).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

/// A symbolic derivation step failed to reproduce its expected form.
/// Treated as a critical finding: it means the algebra chain is broken.
class DerivationMismatchError : public Error {
 public:
  explicit DerivationMismatchError(const std::string& what) : Error(what) {}
};

/// A root enclosure does not carry the evidence its flags promise.
class InconsistentEnclosureError : public Error {
 public:
  explicit InconsistentEnclosureError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed (a bug, not a user error).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace fltkit
