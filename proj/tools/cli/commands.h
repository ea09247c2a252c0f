// Copyright 2026 The pmdecomp Authors
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

// Command implementations behind the pmdecomp executable. Each returns the
// process exit code and writes reports to `out`, diagnostics to `err`.

#ifndef PMDECOMP_TOOLS_CLI_COMMANDS_H_
#define PMDECOMP_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace pmdecomp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInfeasible = 2,
  kExitInternalError = 3,
};

extern const char kToolVersion[];

struct DecomposeFlags {
  bool trace = false;
  bool oracle_check = false;
  std::string output;  // empty: write the decomposition to `out`
};

int RunValidate(const std::string& path, std::ostream& out, std::ostream& err);
int RunDecompose(const std::string& path, const DecomposeFlags& flags,
                 std::ostream& out, std::ostream& err);
int RunVerify(const std::string& instance_path,
              const std::string& decomposition_path, std::ostream& out,
              std::ostream& err);
int RunMinOddCut(const std::string& path, int min_size, std::ostream& out,
                 std::ostream& err);
int RunSample(const std::string& decomposition_path, std::uint64_t seed,
              int count, std::ostream& out, std::ostream& err);

int RunOracleMatchings(const std::string& path, std::ostream& out,
                       std::ostream& err);
int RunOracleDecompose(const std::string& path, const std::string& output,
                       std::ostream& out, std::ostream& err);

}  // namespace pmdecomp::cli

#endif  // PMDECOMP_TOOLS_CLI_COMMANDS_H_
