#pragma once

#include <stdexcept>
#include <string>

namespace plabica {

/// Raised when an operation's input violates its documented precondition
/// (out-of-range parameters, frozen or absent labels, malformed graphs).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a bounded search (mutation BFS) runs out of depth budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace plabica
