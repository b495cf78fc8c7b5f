// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sublrc {

enum class ErrorCode {
  NotPrime,
  OrderTooLarge,
  DivisionByZero,
  DimensionMismatch,
  AmbientMismatch,
  DimensionTooLarge,
  TooLarge,
  OutOfRange,
  BadParams,
  NotDivisible,
  DuplicateBlock,
  MixedDimensions,
  NoRecovery,
  Inconsistent,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported through this type; `code()`
/// identifies the violated precondition and `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sublrc
