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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

struct RunOptions {
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  /// key=value overrides in command-line order.
  std::vector<std::string> sets;
};

/// Loads the experiment file (TOML, or JSON when it starts with '{').
nlohmann::json load_spec_file(const std::string& path);

/// Applies one key=value override. `name`, `seed` and `output_dir` address
/// the top level, dotted keys address a path, anything else goes to params.
void apply_override(nlohmann::json& spec, const std::string& assignment);

/// The resolved report for an experiment document, nothing written yet.
struct RunResult {
  nlohmann::json report;
  std::vector<std::pair<std::string, std::string>> files;  ///< name, content
  std::string output_dir;
};
RunResult execute(const nlohmann::json& spec);

/// Full `qsim run`: load, override, execute, write. Returns the exit code.
int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);

/// `qsim list` table.
void list_command(std::ostream& out);

}  // namespace qsim::cli
