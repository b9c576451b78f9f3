#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grassmann {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched generator counts or an index outside 1..n.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Mismatched coefficient fields, invalid moduli, non-invertible scalars.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Malformed element text or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation is not met.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested size exceeds a configured cap.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// One violated defining relation: (i) for the x_i^2 = 0 family, (i, j) for
/// the anticommutation family. Indices are 1-based; `second == 0` marks the
/// single-index family.
struct RelationViolation {
  int first = 0;
  int second = 0;

  friend bool operator==(const RelationViolation&, const RelationViolation&) = default;
};

/// Images that do not respect the defining relations of the algebra.
class RelationError : public DomainError {
 public:
  RelationError(const std::string& what_kind, std::vector<RelationViolation> violations);

  const std::vector<RelationViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<RelationViolation> violations_;
};

}  // namespace grassmann
