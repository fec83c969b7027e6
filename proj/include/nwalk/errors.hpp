#pragma once

#include <stdexcept>
#include <string>

namespace nwalk {

/// Malformed input or a violated precondition. The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An N-step was looked up in a step set that does not contain it.
class UnknownStepError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An exhaustive or exploratory computation hit its configured budget.
/// The CLI maps it to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nwalk
