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

// Text format for eventually periodic sets, one directive per line:
//
//   # comment
//   dim: 2
//   periods: 2 0 ; 0 2
//   sporadic: 0 0
//   base: 1 0 ; 3 0
//
// `sporadic` is optional. Errors are kParseError with the line number in
// Error::index().

#ifndef MINCOMP_EPSET_TEXT_H_
#define MINCOMP_EPSET_TEXT_H_

#include <string>
#include <string_view>

#include "mincomp/epsets.h"

namespace mincomp::epsets {

EPSet parse_epset(std::string_view text);
std::string format_epset(const EPSet& w);

}  // namespace mincomp::epsets

#endif  // MINCOMP_EPSET_TEXT_H_
