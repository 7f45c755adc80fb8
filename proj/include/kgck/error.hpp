#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgck {

enum class ErrorCode {
  // skeleton validation
  MissingSquare,
  NonBijectiveSquare,
  IncompatibleEndpoints,
  HexagonViolation,
  UnknownVertex,
  UnknownEdge,
  // path arithmetic
  NotComposable,
  DegreeOutOfRange,
  RangeMismatch,
  // budgets
  ClosureBudgetExceeded,
  BudgetExceeded,
  UniverseTooLarge,
  FixpointBudgetExceeded,
  // preconditions
  InexactUniverse,
  CyclicGraphUnsupported,
  PreconditionFailed,
  NoSeparation,
  DomainError,
  IncompleteFamily,
  PairNotInGrid,
  HypothesisNotMet,
  // file formats
  ParseError,
  DuplicateId,
  UnknownColor,
  // a runtime-checked lemma or postcondition failed
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// True for the budget family of errors (CLI exit code 3).
bool is_budget_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace kgck
