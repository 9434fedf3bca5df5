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

#include <utility>
#include <vector>

#include <json.hpp>

#include "qsim/complexity/oracle.hpp"
#include "qsim/core/state.hpp"

// Interferometric search: a 2^n-level particle in the uniform state |a> is
// split into two arms, the oracle flips the sign of every level except the
// marked one on the second arm (|b>), and the arms meet at a path
// singularity, which acts as the constant gate Q2(theta) on the arm qubit.

namespace qsim::complexity {

struct InterferometryOptions {
  std::size_t theta_points = 257;  ///< grid over one period [0, 2 pi]
  double sigma = 3.141592653589793;  ///< width of the Gaussian envelope kappa
};

struct FringePoint {
  double theta;
  double intensity;
};

struct InterferometryResult {
  std::size_t n = 0;
  std::size_t marked = 0;
  double detect_prob = 0.0;  ///< ||a + b||^2
  double dark = 0.0;         ///< intensity at theta = 0
  double bright = 0.0;       ///< intensity at theta = pi
  std::vector<FringePoint> fringe;
  /// Trapezoid mean of the intensity over one period; ||a||^2 + ||b||^2 = 2
  /// when probability is conserved across the fringes.
  double period_mean = 0.0;
  /// int kappa^2 I / int kappa^2 * 2 over +-8 sigma, kappa = exp(-theta^2/(4 sigma^2)).
  double gaussian_ratio = 0.0;
  double sigma = 0.0;
};

/// Arm qubit (subsystem 0) times the 2^n-level particle: |0>|a> + |1>|b>.
PureState interferometer_state(const BooleanOracle& oracle);

/// ||a + e^{i theta} b||^2 from the constant gate Q2(theta) on the arm qubit.
double fringe_intensity(const BooleanOracle& oracle, double theta);

/// Closed forms: I(theta) = 2 - 2 (1 - 2^{1-n}) cos(theta).
double fringe_closed_form(std::size_t n, double theta);
double gaussian_ratio_closed_form(std::size_t n, double sigma);

/// Requires exactly one marked state.
InterferometryResult interferometric_search(const BooleanOracle& oracle,
                                            const InterferometryOptions& options = {});

nlohmann::json to_json(const InterferometryResult& result);

}  // namespace qsim::complexity
