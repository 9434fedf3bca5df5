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
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

// Registry of named experiments. Each entry declares its parameters with
// defaults; unknown parameters and wrongly typed values are rejected before
// anything runs.

namespace qsim::cli {

/// Parameters merged over an experiment's defaults, with typed access.
class Params {
 public:
  /// Throws ValidationError for keys absent from `defaults` or values whose
  /// JSON type differs from the default's.
  Params(const nlohmann::json& defaults, const nlohmann::json& given);

  double number(const std::string& key) const;
  long long integer(const std::string& key) const;
  /// Integer in [lo, hi].
  std::size_t count(const std::string& key, std::size_t lo, std::size_t hi) const;
  bool boolean(const std::string& key) const;
  std::string string(const std::string& key) const;
  std::vector<double> numbers(const std::string& key) const;
  const nlohmann::json& raw(const std::string& key) const;

  /// Subset of the resolved values for the listed keys.
  nlohmann::json subset(const std::vector<std::string>& keys) const;
  const nlohmann::json& resolved() const { return values_; }

 private:
  nlohmann::json values_;
};

struct OutputFile {
  std::string name;
  std::string content;
};

struct ExperimentOutput {
  nlohmann::json results = nlohmann::json::object();
  std::vector<OutputFile> files;
  /// key/value lines for summary.txt
  std::vector<std::pair<std::string, std::string>> summary;
};

struct Experiment {
  std::string name;
  std::string description;
  std::string anchor;  ///< the concept the experiment reproduces
  nlohmann::json defaults;
  std::function<ExperimentOutput(const Params&, std::uint64_t seed)> run;
};

/// All experiments in stable order.
const std::vector<Experiment>& registry();

/// nullptr when the name is unknown.
const Experiment* find_experiment(const std::string& name);

}  // namespace qsim::cli
