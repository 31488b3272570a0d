#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permrel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, permutations, generator lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A letter outside [1, n]; the message names the offending token.
class LetterRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// An operation was called with arguments that violate its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A congruence table would need more word slots than the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration budget exceeded: requires " +
              std::to_string(required) + " word slots, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// z = a_1...a_n failed the table-scale centrality check.
class CentralityError : public Error {
 public:
  using Error::Error;
};

}  // namespace permrel
