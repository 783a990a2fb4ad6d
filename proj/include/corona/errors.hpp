#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace corona {

enum class ErrorCode {
  PoleTooClose,
  PoleInsideMargin,
  ZeroOnBoundary,
  DuplicatePoint,
  NotInSubalgebra,
  DimensionMismatch,
  AllZero,
  CommonZeroInDisk,
  NotInIdealNumerically,
  GramianZero,
  FcZero,
  NotASolution,
  HypothesisViolated,
  SupExceedsOne,
  DomainError,
  NonMonotone,
  ParseError,
  RejectionBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. The code identifies the failure
// class; `witness` carries the offending point when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::complex<double>> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::complex<double>>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<std::complex<double>> witness_;
};

}  // namespace corona
