#pragma once

#include <stdexcept>
#include <string>

namespace uthopf {

/// Raised when an operation's precondition is violated by its arguments.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed the configured element budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace uthopf
