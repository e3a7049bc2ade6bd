// SPDX-License-Identifier: Apache-2.0
//
// fdrlos: fluctuating double-Rayleigh line-of-sight fading library
// Copyright (C) 2026 The fdrlos contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef FDRLOS_CLI_CLI_HPP
#define FDRLOS_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fdrlos::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitUsage = 2,    // bad flags or parameters outside a model's domain
    kExitNumeric = 3,  // accuracy or divergence failure
};

/// Runs one command line (without the program name). Results go to `out`
/// unless an --output file is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable naming the default output directory of `figure`.
inline constexpr const char* kOutputDirEnv = "FDRLOS_OUTPUT_DIR";

}  // namespace fdrlos::cli

#endif  // FDRLOS_CLI_CLI_HPP
