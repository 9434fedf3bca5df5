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

#include <gtest/gtest.h>

#include "qsim/complexity/oracle.hpp"

using namespace qsim;
using namespace qsim::complexity;

TEST(BooleanOracle, Construction) {
  const auto o = BooleanOracle::from_solutions(4, {3, 9});
  EXPECT_EQ(o.n(), 4u);
  EXPECT_EQ(o.count(), 2u);
  EXPECT_TRUE(o(3));
  EXPECT_FALSE(o(4));
  EXPECT_EQ(o.solutions(), (std::vector<std::size_t>{3, 9}));
  EXPECT_EQ(BooleanOracle::from_bitstring(o.bitstring()).truth_table(), o.truth_table());

  EXPECT_THROW(BooleanOracle(0, {true}), ValidationError);
  EXPECT_THROW(BooleanOracle(15, std::vector<bool>(std::size_t{1} << 15)), ValidationError);
  EXPECT_THROW(BooleanOracle(2, {true, false}), ValidationError);
  EXPECT_THROW(BooleanOracle::from_solutions(2, {4}), ValidationError);
  EXPECT_THROW(BooleanOracle::from_bitstring("010"), ValidationError);
  EXPECT_THROW(BooleanOracle::from_bitstring("01x0"), ValidationError);
}

TEST(BooleanOracle, Json) {
  EXPECT_EQ(oracle_from_json(nlohmann::json::parse(R"({"n":3,"solutions":[1,6]})")).bitstring(),
            "01000010");
  EXPECT_EQ(oracle_from_json(nlohmann::json::parse(R"({"truth_table":"0110"})")).count(), 2u);
  EXPECT_EQ(oracle_from_json(nlohmann::json("0001")).solutions(), (std::vector<std::size_t>{3}));
  EXPECT_EQ(to_json(BooleanOracle::from_solutions(2, {1})).dump(), R"({"n":2,"solutions":[1]})");
  EXPECT_THROW(oracle_from_json(nlohmann::json::parse(R"({"solutions":[1]})")), ValidationError);
  EXPECT_THROW(oracle_from_json(nlohmann::json::parse(R"({"n":2,"solutions":[-1]})")), ValidationError);
  EXPECT_THROW(oracle_from_json(nlohmann::json::parse(R"({"n":3,"truth_table":"0110"})")),
               ValidationError);
}

TEST(BooleanOracle, RandomOraclesCoverAllKinds) {
  bool saw_empty = false, saw_sparse = false, saw_dense = false;
  for (std::size_t i = 0; i < 60; ++i) {
    Rng rng = trial_rng(5, 0, i);
    const auto o = random_oracle(6, rng);
    saw_empty |= o.count() == 0;
    saw_sparse |= o.count() >= 1 && o.count() <= 3;
    saw_dense |= o.count() > 10;
  }
  EXPECT_TRUE(saw_empty && saw_sparse && saw_dense);
}

TEST(Qbf, ReferenceEvaluation) {
  // f(x, y) = x XOR y
  const auto xor_oracle = BooleanOracle::from_bitstring("0110");
  EXPECT_TRUE(evaluate_qbf(xor_oracle, "AE"));
  EXPECT_FALSE(evaluate_qbf(xor_oracle, "EA"));
  EXPECT_TRUE(evaluate_qbf(xor_oracle, "EE"));
  EXPECT_FALSE(evaluate_qbf(xor_oracle, "AA"));
  EXPECT_THROW(evaluate_qbf(xor_oracle, "A"), ValidationError);
  EXPECT_THROW(evaluate_qbf(xor_oracle, "AX"), ValidationError);
}
