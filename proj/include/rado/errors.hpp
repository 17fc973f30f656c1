#pragma once

#include <stdexcept>
#include <string>

namespace rado {

/// Malformed coloring text, pattern JSON, or rational literal.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file that cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter outside the documented domain (a < 1, r != 2 where two
/// colors are required, empty pattern, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive search would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double estimated, double budget)
      : std::runtime_error("search budget exceeded: estimated " + std::to_string(estimated) +
                           " steps > budget " + std::to_string(budget)),
        estimated_(estimated),
        budget_(budget) {}
  double estimated() const { return estimated_; }
  double budget() const { return budget_; }

 private:
  double estimated_;
  double budget_;
};

/// Greedy run hit max_blocks before its natural stopping rule fired.
class BlockCapReached : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A piecewise function does not tile [0, inf).
class PieceTilingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rado
