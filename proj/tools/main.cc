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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"

int main(int argc, char** argv) {
  namespace cli = pmdecomp::cli;
  CLI::App app{"Exact decomposition of fractional perfect matchings"};
  app.set_version_flag("--version", cli::kToolVersion);
  app.require_subcommand(1);

  std::string instance, decomposition, output;
  bool trace = false, oracle_check = false;
  int min_size = 1, count = 1;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand(
      "validate", "Check that an instance is an alpha-fractional perfect "
                  "matching; prints a certificate otherwise");
  validate->add_option("instance", instance, "Instance file")->required();

  auto* decompose = app.add_subcommand(
      "decompose", "Decompose an instance into weighted perfect matchings");
  decompose->add_option("instance", instance, "Instance file")->required();
  decompose->add_option("--output", output, "Write the decomposition here");
  decompose->add_flag("--trace", trace, "Report every phase");
  decompose->add_flag("--oracle-check", oracle_check,
                      "Cross-check feasibility by brute force (small n)");

  auto* verify = app.add_subcommand(
      "verify", "Check a decomposition file against an instance");
  verify->add_option("instance", instance, "Instance file")->required();
  verify->add_option("decomposition", decomposition, "Decomposition file")
      ->required();

  auto* min_cut = app.add_subcommand(
      "min-odd-cut", "Minimum odd cut of an instance's support");
  min_cut->add_option("instance", instance, "Instance file")->required();
  min_cut->add_option("--min-size", min_size,
                      "1 (singletons allowed) or 3 (brute force, n <= 12)")
      ->check(CLI::IsMember({1, 3}));

  auto* sample = app.add_subcommand(
      "sample", "Draw perfect matchings from a decomposition");
  sample->add_option("decomposition", decomposition, "Decomposition file")
      ->required();
  sample->add_option("--seed", seed, "Generator seed");
  sample->add_option("--count", count, "Number of draws")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference tools");
  oracle->require_subcommand(1);
  auto* matchings = oracle->add_subcommand(
      "matchings", "Enumerate every perfect matching of the instance graph");
  matchings->add_option("instance", instance, "Instance file")->required();
  auto* oracle_decompose = oracle->add_subcommand(
      "decompose", "Exact decomposition by linear programming (small n)");
  oracle_decompose->add_option("instance", instance, "Instance file")
      ->required();
  oracle_decompose->add_option("--output", output,
                               "Write the decomposition here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*validate) return cli::RunValidate(instance, out, err);
  if (*decompose) {
    return cli::RunDecompose(instance, {trace, oracle_check, output}, out, err);
  }
  if (*verify) return cli::RunVerify(instance, decomposition, out, err);
  if (*min_cut) return cli::RunMinOddCut(instance, min_size, out, err);
  if (*sample) return cli::RunSample(decomposition, seed, count, out, err);
  if (*matchings) return cli::RunOracleMatchings(instance, out, err);
  if (*oracle_decompose) {
    return cli::RunOracleDecompose(instance, output, out, err);
  }
  return cli::kExitInputError;
}
