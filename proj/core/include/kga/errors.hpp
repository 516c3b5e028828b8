#ifndef KGA_ERRORS_HPP
#define KGA_ERRORS_HPP

#include <stdexcept>

namespace kga {

/// Thrown when a computation would exceed a documented size/time budget
/// (e.g. exhaustive search beyond 24 items, DP beyond n*capacity = 1e8).
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a method's preconditions rule out the given input
/// (e.g. weight-indexed DP on non-integer weights).
class NotApplicableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace kga

#endif // KGA_ERRORS_HPP
