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
#include <string>
#include <vector>

#include <json.hpp>

#include "qsim/core/random.hpp"

namespace qsim::complexity {

inline constexpr std::size_t kMaxOracleBits = 14;

/// f: {0,1}^n -> {0,1} as a truth table. Entry x is f(x), with the first
/// index qubit as the most significant bit of x.
class BooleanOracle {
 public:
  BooleanOracle(std::size_t n, std::vector<bool> truth_table);

  static BooleanOracle from_solutions(std::size_t n, const std::vector<std::size_t>& solutions);
  /// '0'/'1' characters, length 2^n.
  static BooleanOracle from_bitstring(const std::string& bits);

  std::size_t n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  bool operator()(std::size_t x) const { return table_.at(x); }
  const std::vector<bool>& truth_table() const { return table_; }

  std::vector<std::size_t> solutions() const;
  std::size_t count() const;
  bool satisfiable() const { return count() > 0; }
  std::string bitstring() const;

 private:
  std::size_t n_;
  std::vector<bool> table_;
};

/// Oracle with a random number of solutions: none, one to three scattered
/// solutions, or a dense random table, in roughly equal proportion.
BooleanOracle random_oracle(std::size_t n, Rng& rng);

/// Accepts {"n": n, "solutions": [...]}, {"truth_table": "0110..."} or a bare
/// bitstring.
BooleanOracle oracle_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BooleanOracle& oracle);

/// Reference evaluation of Q_1 x_1 ... Q_n x_n f(x) for a prefix of 'A'
/// (for all) and 'E' (exists) characters.
bool evaluate_qbf(const BooleanOracle& oracle, const std::string& prefix);

}  // namespace qsim::complexity
