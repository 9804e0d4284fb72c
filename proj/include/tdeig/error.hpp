#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdeig {

enum class ErrorCode {
  BranchOutOfRange,
  NonFinite,
  NoConvergence,
  DomainError,
  InvalidGain,
  InvalidParams,
  NotAssignableAsRightmost,
  ConditionViolated,
  AlphaOutOfRange,
  BoundaryRootSuspected,
  MismatchDetected,
  InvalidStep,
  InsufficientData,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BranchOutOfRange: return "BranchOutOfRange";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidGain: return "InvalidGain";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotAssignableAsRightmost: return "NotAssignableAsRightmost";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::BoundaryRootSuspected: return "BoundaryRootSuspected";
    case ErrorCode::MismatchDetected: return "MismatchDetected";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::InsufficientData: return "InsufficientData";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdeig
