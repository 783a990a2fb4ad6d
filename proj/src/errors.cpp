#include "corona/errors.hpp"

namespace corona {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleTooClose: return "PoleTooClose";
    case ErrorCode::PoleInsideMargin: return "PoleInsideMargin";
    case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotInSubalgebra: return "NotInSubalgebra";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::CommonZeroInDisk: return "CommonZeroInDisk";
    case ErrorCode::NotInIdealNumerically: return "NotInIdealNumerically";
    case ErrorCode::GramianZero: return "GramianZero";
    case ErrorCode::FcZero: return "FcZero";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SupExceedsOne: return "SupExceedsOne";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace corona
