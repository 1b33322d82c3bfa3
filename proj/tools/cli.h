// Copyright 2026 The bglemma Authors.
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

// The bglemma command line front end.
//
// Exit status: 0 success, 1 usage error, 2 I/O or format error, 3 failure
// of a strict-mode scan, 4 malformed tag or input line.

#ifndef BGLEMMA_TOOLS_CLI_H_
#define BGLEMMA_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace bglemma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitStrict = 3;
inline constexpr int kExitMalformed = 4;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace bglemma::cli

#endif  // BGLEMMA_TOOLS_CLI_H_
