#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

/// Invalid input: bad parameters, malformed matrices, contract violations
/// detected at an API boundary.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured term budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical post-processing could not reach the requested accuracy.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact data is internally inconsistent (e.g. extra power sums disagree
/// with a reconstructed characteristic polynomial).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gkz
