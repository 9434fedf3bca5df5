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

#include <cmath>
#include <numbers>

#include "qsim/complexity/interferometry.hpp"

using namespace qsim;
using namespace qsim::complexity;

namespace {
BooleanOracle last_marked(std::size_t n) { return BooleanOracle::from_solutions(n, {(std::size_t{1} << n) - 1}); }
}  // namespace

TEST(Interferometry, DetectionProbability) {
  EXPECT_NEAR(interferometric_search(last_marked(2)).detect_prob, 1.0, 1e-15);
  for (std::size_t n = 2; n <= 12; ++n)
    EXPECT_NEAR(interferometric_search(last_marked(n), {17, 1.0}).detect_prob,
                4.0 * std::ldexp(1.0, -static_cast<int>(n)), 1e-15);
}

TEST(Interferometry, DarkAndBrightFringes) {
  for (std::size_t n : {3u, 6u, 9u}) {
    const auto r = interferometric_search(last_marked(n));
    const double eps = std::ldexp(1.0, -static_cast<int>(n));
    EXPECT_NEAR(r.dark, 4.0 * eps, 1e-12);
    EXPECT_NEAR(r.bright, 4.0 * (1.0 - eps), 1e-12);
    EXPECT_LT(r.bright, 4.0);
    for (const auto& p : r.fringe) EXPECT_NEAR(p.intensity, fringe_closed_form(n, p.theta), 1e-12);
    EXPECT_NEAR(r.period_mean, 2.0, 1e-12);
    EXPECT_NEAR(r.gaussian_ratio, gaussian_ratio_closed_form(n, std::numbers::pi), 1e-6);
  }
}

TEST(Interferometry, MarkedStateAnywhere) {
  const auto o = BooleanOracle::from_solutions(5, {7});
  EXPECT_NEAR(fringe_intensity(o, 0.0), 4.0 / 32.0, 1e-15);
  EXPECT_THROW(interferometric_search(BooleanOracle::from_solutions(5, {1, 2})), ValidationError);
  EXPECT_THROW(interferometric_search(BooleanOracle::from_solutions(5, {})), ValidationError);
}
