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

#include "qsim/complexity/oracle.hpp"

#include <algorithm>

#include "qsim/core/types.hpp"

namespace qsim::complexity {

BooleanOracle::BooleanOracle(std::size_t n, std::vector<bool> truth_table)
    : n_(n), table_(std::move(truth_table)) {
  if (n_ < 1 || n_ > kMaxOracleBits) throw ValidationError("oracle: n must lie in [1, 14]");
  if (table_.size() != (std::size_t{1} << n_))
    throw ValidationError("oracle: truth table length must be 2^n");
}

BooleanOracle BooleanOracle::from_solutions(std::size_t n, const std::vector<std::size_t>& solutions) {
  if (n < 1 || n > kMaxOracleBits) throw ValidationError("oracle: n must lie in [1, 14]");
  std::vector<bool> table(std::size_t{1} << n, false);
  for (std::size_t s : solutions) {
    if (s >= table.size()) throw ValidationError("oracle: solution index out of range");
    table[s] = true;
  }
  return BooleanOracle(n, std::move(table));
}

BooleanOracle BooleanOracle::from_bitstring(const std::string& bits) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < bits.size()) ++n;
  if (bits.empty() || (std::size_t{1} << n) != bits.size())
    throw ValidationError("oracle: bitstring length must be a power of two >= 2");
  std::vector<bool> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("oracle: bitstring must contain only 0 and 1");
    table.push_back(c == '1');
  }
  return BooleanOracle(n, std::move(table));
}

std::vector<std::size_t> BooleanOracle::solutions() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x]) out.push_back(x);
  return out;
}

std::size_t BooleanOracle::count() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), true));
}

std::string BooleanOracle::bitstring() const {
  std::string s;
  s.reserve(table_.size());
  for (bool b : table_) s.push_back(b ? '1' : '0');
  return s;
}

BooleanOracle random_oracle(std::size_t n, Rng& rng) {
  const std::size_t size = std::size_t{1} << n;
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<bool> table(size, false);
  switch (kind(rng)) {
    case 0:
      break;
    case 1: {
      std::uniform_int_distribution<std::size_t> k(1, std::min<std::size_t>(3, size));
      std::uniform_int_distribution<std::size_t> pos(0, size - 1);
      for (std::size_t left = k(rng); left > 0;) {
        const std::size_t x = pos(rng);
        if (!table[x]) {
          table[x] = true;
          --left;
        }
      }
      break;
    }
    default: {
      std::bernoulli_distribution bit(0.5);
      for (std::size_t x = 0; x < size; ++x) table[x] = bit(rng);
    }
  }
  return BooleanOracle(n, std::move(table));
}

BooleanOracle oracle_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BooleanOracle::from_bitstring(j.get<std::string>());
  if (!j.is_object()) throw ValidationError("oracle: expected an object or a bitstring");
  if (j.contains("truth_table")) {
    if (!j.at("truth_table").is_string()) throw ValidationError("oracle: truth_table must be a string");
    const auto o = BooleanOracle::from_bitstring(j.at("truth_table").get<std::string>());
    if (j.contains("n") && j.at("n") != o.n()) throw ValidationError("oracle: n disagrees with truth_table");
    return o;
  }
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw ValidationError("oracle: integer 'n' is required");
  const auto n = j.at("n").get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxOracleBits))
    throw ValidationError("oracle: n must lie in [1, 14]");
  std::vector<std::size_t> solutions;
  if (j.contains("solutions")) {
    if (!j.at("solutions").is_array()) throw ValidationError("oracle: solutions must be an array");
    for (const auto& s : j.at("solutions")) {
      if (!s.is_number_integer() || s.get<long long>() < 0)
        throw ValidationError("oracle: solutions must be nonnegative integers");
      solutions.push_back(s.get<std::size_t>());
    }
  }
  return BooleanOracle::from_solutions(static_cast<std::size_t>(n), solutions);
}

nlohmann::json to_json(const BooleanOracle& oracle) {
  return {{"n", oracle.n()}, {"solutions", oracle.solutions()}};
}

namespace {

bool qbf_rec(const BooleanOracle& f, const std::string& prefix, std::size_t depth, std::size_t x) {
  if (depth == prefix.size()) return f(x);
  const bool a = qbf_rec(f, prefix, depth + 1, x << 1);
  const bool b = qbf_rec(f, prefix, depth + 1, (x << 1) | 1);
  return prefix[depth] == 'A' ? (a && b) : (a || b);
}

}  // namespace

bool evaluate_qbf(const BooleanOracle& oracle, const std::string& prefix) {
  if (prefix.size() != oracle.n()) throw ValidationError("QBF prefix length must equal n");
  for (char c : prefix)
    if (c != 'A' && c != 'E') throw ValidationError("QBF prefix must contain only 'A' and 'E'");
  return qbf_rec(oracle, prefix, 0, 0);
}

}  // namespace qsim::complexity
