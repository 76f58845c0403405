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

// The `mincomp` command line.
//
//   mincomp decompose FILE
//   mincomp decide FILE
//   mincomp witness FILE [--shells K] [--core R|LO:HI]
//   mincomp verify FILE [--shells K] [--core ...] [--dump-in DUMP]
//   mincomp group --group A,B,... <extract-minimal|check|pair|rnet|product>
//   mincomp gallery <infinite|diagonal|poly|ksy>
//
// Every command takes --machine for key=value output.

#ifndef MINCOMP_CLI_H_
#define MINCOMP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mincomp::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEmptyBase = 3;
inline constexpr int kExitSearchTooLarge = 4;
inline constexpr int kExitVerification = 5;
inline constexpr int kExitNotExists = 10;
inline constexpr int kExitUnknown = 11;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mincomp::cli

#endif  // MINCOMP_CLI_H_
