// Copyright 2026 the nuradius authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NURADIUS_ERROR_HPP
#define NURADIUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nuradius {

enum class ErrorCode {
  DimensionMismatch,
  ZeroVector,
  ZeroOperator,
  ZeroDirection,
  DegenerateBall,
  EnumerationTooLarge,
  NotUnitVector,
  DegenerateRecovery,
  InconsistentOracle,
  InvalidParameter,
  ParseError,
  UnknownName,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::DegenerateBall: return "DegenerateBall";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::DegenerateRecovery: return "DegenerateRecovery";
    case ErrorCode::InconsistentOracle: return "InconsistentOracle";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "UnknownError";
}

/// Exception carrying a stable error code; what() starts with the code name
/// so CLI consumers can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail = "")
      : std::runtime_error(detail.empty()
                               ? std::string(error_name(code))
                               : std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nuradius

#endif  // NURADIUS_ERROR_HPP
