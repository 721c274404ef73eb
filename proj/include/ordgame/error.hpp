// Copyright 2026 The ordgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordgame {

enum class ErrorCode {
  DimensionMismatch,
  DuplicateLabel,
  IndexOutOfBounds,
  ShapeError,
  CycleDetected,
  EqualityStrictConflict,
  ExtensionLimitExceeded,
  DomainError,
  MissingSymbol,
  DivisionByZero,
  UnknownClaim,
  ParseError,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::EqualityStrictConflict: return "EqualityStrictConflict";
    case ErrorCode::ExtensionLimitExceeded: return "ExtensionLimitExceeded";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingSymbol: return "MissingSymbol";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordgame
