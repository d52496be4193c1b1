// Copyright 2026 The tqdstab Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tqd::cli {

enum ExitCode : int {
    kPass = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

// Runs one command.  args excludes the program name.  The JSON report goes to
// --out when given (and additionally to `out` with --json), otherwise to
// `out`; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace tqd::cli
