#pragma once

#include <stdexcept>
#include <string>

namespace resonlab {

/// Base of every error raised by the library. The CLI maps any of these to
/// exit code 1 and prints what() verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

/// Request exceeds a memory or work guard.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error("resource error: " + what) {}
};

/// A requested accuracy cannot be certified with the given configuration.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error("precision error: " + what) {}
};

/// Evaluation at a pole (s = 1, principal character at s = 1).
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError("pole: " + what) {}
};

/// Refusal to divide by a value too close to zero.
class NearZeroError : public Error {
 public:
  explicit NearZeroError(const std::string& what) : Error("near-zero error: " + what) {}
};

/// Empty constraint set for a resonator budget.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error("infeasible: " + what) {}
};

/// Two computational routes that must agree did not.
class IdentityViolation : public Error {
 public:
  explicit IdentityViolation(const std::string& what) : Error("identity violation: " + what) {}
};

/// Operation not defined for the given resonator kind.
class UnsupportedKind : public DomainError {
 public:
  explicit UnsupportedKind(const std::string& what) : DomainError("unsupported kind: " + what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("I/O error: " + what) {}
};

}  // namespace resonlab
