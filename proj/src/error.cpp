#include "kgck/error.hpp"

namespace kgck {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingSquare: return "MissingSquare";
    case ErrorCode::NonBijectiveSquare: return "NonBijectiveSquare";
    case ErrorCode::IncompatibleEndpoints: return "IncompatibleEndpoints";
    case ErrorCode::HexagonViolation: return "HexagonViolation";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::FixpointBudgetExceeded: return "FixpointBudgetExceeded";
    case ErrorCode::InexactUniverse: return "InexactUniverse";
    case ErrorCode::CyclicGraphUnsupported: return "CyclicGraphUnsupported";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoSeparation: return "NoSeparation";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::IncompleteFamily: return "IncompleteFamily";
    case ErrorCode::PairNotInGrid: return "PairNotInGrid";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownColor: return "UnknownColor";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_budget_error(ErrorCode code) {
  return code == ErrorCode::ClosureBudgetExceeded || code == ErrorCode::BudgetExceeded ||
         code == ErrorCode::UniverseTooLarge || code == ErrorCode::FixpointBudgetExceeded;
}

}  // namespace kgck
