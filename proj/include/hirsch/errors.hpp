#pragma once

#include <stdexcept>
#include <string>

namespace hirsch {

/// An input violates the mathematical contract of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element has the wrong bidegree or is not homogeneous.
class DegreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A requested size exceeds a guard (enumeration bounds, unbounded data).
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hirsch
