// Copyright 2026 The KPE Authors.
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

#ifndef KPE_TOOLS_CLI_HPP_
#define KPE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace kpe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitProvider = 3;
inline constexpr int kExitCoverage = 4;
inline constexpr int kExitUsage = 64;

// Runs one invocation. `args` excludes the program name. Human-readable
// output goes to `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kpe::cli

#endif  // KPE_TOOLS_CLI_HPP_
