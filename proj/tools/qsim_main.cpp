// Copyright 2026 The qsim Authors
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

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "qsim/cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qsim: nonstandard quantum operations, signaling and complexity experiments"};
  app.set_version_flag("--version", std::string(QSIM_VERSION));
  app.require_subcommand(1);

  qsim::cli::RunOptions opts;
  std::uint64_t seed = 0;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run an experiment described by a TOML or JSON file");
  run->add_option("spec", opts.spec_path, "Experiment file")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Override the seed");
  auto* out_opt = run->add_option("--out", out_dir, "Override the output directory");
  run->add_option("--set", opts.sets, "Override a value: key=value (repeatable)")
      ->take_all()
      ->allow_extra_args(false);

  app.add_subcommand("list", "List the available experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qsim::cli::kExitValidation;
  }

  if (app.got_subcommand("list")) {
    qsim::cli::list_command(std::cout);
    return qsim::cli::kExitOk;
  }
  if (*seed_opt) opts.seed = seed;
  if (*out_opt) opts.out_dir = out_dir;
  return qsim::cli::run_command(opts, std::cout, std::cerr);
}
