#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mackey {

/// Base class of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Process exit code the CLI maps this error to.
  virtual int exit_code() const noexcept { return 1; }
};

/// Malformed input (unparseable file, bad table, invalid permutation).
class ParseError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// Well-formed input whose pieces do not fit together (endpoint mismatch,
/// non-normal subgroup, non-composable word, ...).
class TypeError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// A configured size bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

/// An exhaustive search ran past its candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Process-wide limit used by default-constructed budgets (the CLI sets it
/// from --budget before any work starts).
inline std::uint64_t& default_budget_limit() {
  static std::uint64_t limit = kDefaultBudget;
  return limit;
}

/// Candidate counter shared by the exhaustive searches.
class Budget {
 public:
  Budget() : limit_(default_budget_limit()) {}
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void spend(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExceeded("search budget exceeded (" + std::to_string(limit_) +
                           " candidate extensions)");
    }
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace mackey
