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

#include "qsim/cli/runner.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qsim/cli/experiments.hpp"
#include "qsim/cli/output.hpp"
#include "qsim/cli/toml_lite.hpp"
#include "qsim/core/types.hpp"

namespace qsim::cli {

namespace {

using nlohmann::json;

const char* const kTopLevelKeys[] = {"name", "seed", "output_dir", "params"};

bool is_top_level(const std::string& key) {
  for (const char* k : kTopLevelKeys)
    if (key == k) return true;
  return false;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t seed_of(const json& spec) {
  if (!spec.contains("seed")) return 0;
  const json& s = spec["seed"];
  if (!s.is_number_integer() || s.get<long long>() < 0)
    throw ValidationError("seed must be a non-negative integer");
  return s.get<std::uint64_t>();
}

std::string summary_text(const json& report, const ExperimentOutput& out,
                         const std::vector<std::string>& files) {
  std::ostringstream s;
  s << "experiment: " << report["experiment"].get<std::string>() << "\n";
  s << "version: " << report["version"].get<std::string>() << "\n";
  s << "seed: " << report["seed"].get<std::uint64_t>() << "\n";
  for (const auto& [k, v] : out.summary) s << k << ": " << v << "\n";
  s << "files:";
  for (const auto& f : files) s << " " << f;
  s << "\n";
  return s.str();
}

}  // namespace

json load_spec_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read spec file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("invalid JSON spec: ") + e.what());
    }
  }
  return parse_toml(text);
}

void apply_override(json& spec, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ValidationError("--set expects key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const json value = parse_toml_value(assignment.substr(eq + 1));
  std::vector<std::string> path = split(key, '.');
  for (const auto& p : path)
    if (p.empty()) throw ValidationError("--set: empty key segment in '" + key + "'");
  if (path.size() == 1 && !is_top_level(key)) path.insert(path.begin(), "params");
  json* node = &spec;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!node->contains(path[i])) (*node)[path[i]] = json::object();
    node = &(*node)[path[i]];
    if (!node->is_object()) throw ValidationError("--set: '" + path[i] + "' is not a table");
  }
  (*node)[path.back()] = value;
}

RunResult execute(const json& spec) {
  if (!spec.is_object()) throw ValidationError("spec must be a table");
  for (const auto& [k, v] : spec.items())
    if (!is_top_level(k)) throw ValidationError("unknown top-level key '" + k + "'");
  if (!spec.contains("name") || !spec["name"].is_string())
    throw ValidationError("spec needs a string 'name'");
  const std::string name = spec["name"].get<std::string>();
  const Experiment* exp = find_experiment(name);
  if (!exp) throw ValidationError("unknown experiment '" + name + "' (see `qsim list`)");
  const std::uint64_t seed = seed_of(spec);
  std::string out_dir = name;
  if (spec.contains("output_dir")) {
    if (!spec["output_dir"].is_string() || spec["output_dir"].get<std::string>().empty())
      throw ValidationError("output_dir must be a non-empty string");
    out_dir = spec["output_dir"].get<std::string>();
  }
  const Params params(exp->defaults, spec.contains("params") ? spec["params"] : json());

  const ExperimentOutput out = exp->run(params, seed);

  RunResult r;
  r.output_dir = out_dir;
  std::vector<std::string> names;
  for (const auto& f : out.files) names.push_back(f.name);
  names.push_back("summary.txt");
  r.report = {{"tool", "qsim"},
              {"version", QSIM_VERSION},
              {"experiment", name},
              {"seed", seed},
              {"config", {{"name", name}, {"seed", seed}, {"params", params.resolved()}}},
              {"results", out.results},
              {"files", names}};
  for (const auto& f : out.files) r.files.emplace_back(f.name, f.content);
  r.files.emplace_back("summary.txt", summary_text(r.report, out, names));
  r.files.emplace_back("report.json", dump_report(r.report));
  return r;
}

int run_command(const RunOptions& options, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    json spec = load_spec_file(options.spec_path);
    if (!spec.is_object()) throw ValidationError("spec must be a table");
    for (const auto& s : options.sets) apply_override(spec, s);
    if (options.seed) spec["seed"] = *options.seed;
    if (options.out_dir) spec["output_dir"] = *options.out_dir;
    result = execute(spec);
  } catch (const ValidationError& e) {
    err << "qsim: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericError& e) {
    err << "qsim: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const GateDomainError& e) {
    err << "qsim: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const nlohmann::json::exception& e) {
    err << "qsim: validation error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    const std::filesystem::path dir(result.output_dir);
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : result.files) write_atomic(dir / name, content);
  } catch (const std::exception& e) {
    err << "qsim: write failure: " << e.what() << "\n";
    return kExitIo;
  }
  out << "qsim: " << result.report["experiment"].get<std::string>() << " -> "
      << (std::filesystem::path(result.output_dir) / "report.json").string() << "\n";
  return kExitOk;
}

void list_command(std::ostream& out) {
  std::size_t name_w = 4, anchor_w = 6;
  for (const auto& e : registry()) {
    name_w = std::max(name_w, e.name.size());
    anchor_w = std::max(anchor_w, e.anchor.size());
  }
  out << std::left << std::setw(static_cast<int>(name_w + 2)) << "NAME"
      << std::setw(static_cast<int>(anchor_w + 2)) << "ANCHOR" << "DESCRIPTION\n";
  for (const auto& e : registry())
    out << std::left << std::setw(static_cast<int>(name_w + 2)) << e.name
        << std::setw(static_cast<int>(anchor_w + 2)) << e.anchor << e.description << "\n";
}

}  // namespace qsim::cli
