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

#include <limits>

#include "qsim/gates/gate_spec.hpp"
#include "qsim/gates/nonstandard.hpp"
#include "test_util.hpp"

using namespace qsim;
using namespace qsim::gates;
using qsim::testing::matrices_near;

TEST(GateSpec, JsonRoundTrip) {
  const std::vector<GateSpec> specs = {GGate{0.5, 3},  NonlinearOr{},    NonlinearAnd{},
                                       ConstantQ2{1.0}, ConstantQ3{0.5, -0.25}, PostSelectQ2{},
                                       PostSelectQ3{},  Deleter2{},       Deleter3{},
                                       PNormMeasure{4.0}};
  for (const auto& spec : specs) {
    const auto j = to_json(spec);
    const GateSpec back = gate_spec_from_json(j);
    EXPECT_EQ(kind_name(back), kind_name(spec));
    EXPECT_EQ(to_json(back), j);
  }
  EXPECT_EQ(to_json(GGate{0.5, 3}).dump(), R"({"kind":"GGate","params":{"epsilon":0.5,"m":3}})");
}

TEST(GateSpec, Validation) {
  EXPECT_THROW(validate(GGate{0.0, 1}), ValidationError);
  EXPECT_THROW(validate(GGate{0.1, 0}), ValidationError);
  EXPECT_THROW(validate(PNormMeasure{-0.5}), ValidationError);
  EXPECT_THROW(validate(ConstantQ2{std::numeric_limits<double>::infinity()}), ValidationError);
  EXPECT_THROW(gate_spec_from_json(nlohmann::json{{"kind", "Nope"}}), ValidationError);
  EXPECT_THROW(gate_spec_from_json(nlohmann::json{{"kind", "GGate"}, {"params", {{"epsilon", 1.0}}}}),
               ValidationError);
  EXPECT_THROW(
      gate_spec_from_json(nlohmann::json{{"kind", "GGate"}, {"params", {{"epsilon", 1.0}, {"m", 1.5}}}}),
      ValidationError);
  EXPECT_THROW(gate_spec_from_json(nlohmann::json::array()), ValidationError);
}

TEST(GateSpec, Matrices) {
  EXPECT_TRUE(matrices_near(gate_matrix(GGate{1.0, 3}), g_gate(1.0, 3), 0.0));
  EXPECT_TRUE(matrices_near(gate_matrix(ConstantQ3{0.1, 0.2}), constant_q3(0.1, 0.2), 0.0));
  EXPECT_TRUE(matrices_near(gate_matrix(PostSelectQ2{}), post_select_projector(2, 0), 0.0));
  EXPECT_THROW(gate_matrix(NonlinearOr{}), ValidationError);
}
