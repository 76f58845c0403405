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

#ifndef MINCOMP_ERRORS_H_
#define MINCOMP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mincomp {

enum class ErrorCode {
  kSingularBasis,
  kDimensionMismatch,
  kOverflow,
  kGroupMismatch,
  kEmptySet,
  kNotAComplement,
  kNotSymmetric,
  kNotGenerating,
  kNotDisjoint,
  kNotMinimalInput,
  kSearchTooLarge,
  kEmptyBase,
  kNotCanonical,
  kEmptyW1,
  kInvalidCertificate,
  kNegativeShells,
  kMalformedBeam,
  kShellCapExceeded,
  kBadParams,
  kFormViolation,
  kParseError,
  kVerificationFailed,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type. `index`
// carries the offending part for kNotMinimalInput and the line number for
// kParseError; it is zero otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t index = 0);

  ErrorCode code() const { return code_; }
  std::size_t index() const { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

}  // namespace mincomp

#endif  // MINCOMP_ERRORS_H_
