// Copyright 2026 The fatpoints Authors. All Rights Reserved.
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


#ifndef FATPOINTS_CLI_HPP_
#define FATPOINTS_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fatpoints::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kInvalidInput = 2,
  kConjectureViolation = 3,
};

/// "a..b" inclusive, or a single degree "a". Throws std::invalid_argument.
std::pair<std::int64_t, std::int64_t> parse_degree_range(const std::string& text);

/// Runs one subcommand. args excludes the program name. The report goes to
/// out, diagnostics and progress to err. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints::cli

#endif  // FATPOINTS_CLI_HPP_
