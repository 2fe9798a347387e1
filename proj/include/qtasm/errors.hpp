#pragma once

#include <stdexcept>
#include <string>

namespace qtasm {

/// Operation on an element outside its domain (e.g. inverting zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A sample point hit a pole of the expression being evaluated.
class SingularPoint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Caller broke a documented precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Work would exceed a configured search or size bound.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Samples are inconsistent with the declared polynomial shape.
class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtasm
