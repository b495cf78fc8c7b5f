// SPDX-License-Identifier: Apache-2.0

#include "sublrc/error.hpp"

namespace sublrc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DuplicateBlock: return "DuplicateBlock";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::NoRecovery: return "NoRecovery";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace sublrc
