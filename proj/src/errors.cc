// Copyright 2026 The mincomp Authors
//
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

#include "mincomp/errors.h"

namespace mincomp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularBasis: return "SingularBasis";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNotAComplement: return "NotAComplement";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNotMinimalInput: return "NotMinimalInput";
    case ErrorCode::kSearchTooLarge: return "SearchTooLarge";
    case ErrorCode::kEmptyBase: return "EmptyBase";
    case ErrorCode::kNotCanonical: return "NotCanonical";
    case ErrorCode::kEmptyW1: return "EmptyW1";
    case ErrorCode::kInvalidCertificate: return "InvalidCertificate";
    case ErrorCode::kNegativeShells: return "NegativeShells";
    case ErrorCode::kMalformedBeam: return "MalformedBeam";
    case ErrorCode::kShellCapExceeded: return "ShellCapExceeded";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kFormViolation: return "FormViolation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t index)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace mincomp
