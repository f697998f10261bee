// Copyright 2026 The cliffload Authors
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

#ifndef CLIFFLOAD_TOOLS_COMMANDS_HPP
#define CLIFFLOAD_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffload::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kInputError = 2,
    kResourceLimit = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cliffload::cli

#endif  // CLIFFLOAD_TOOLS_COMMANDS_HPP
