// Copyright 2026 The Valet Authors.
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

#ifndef VALET_TOOLS_CLI_H_
#define VALET_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace valet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// The `valet` command line. `args` excludes the program name. Returns the
// process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Splits "mcts(d=1,b=2),random" at commas outside parentheses.
std::vector<std::string> SplitTopLevel(const std::string& text);

}  // namespace valet

#endif  // VALET_TOOLS_CLI_H_
