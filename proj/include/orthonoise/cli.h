//
// Copyright 2026 The Orthonoise Authors.
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
//

#ifndef ORTHONOISE_CLI_H_
#define ORTHONOISE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace orthonoise {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitTranslator = 3,
};

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace orthonoise

#endif  // ORTHONOISE_CLI_H_
