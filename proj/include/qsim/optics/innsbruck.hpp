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

#include <string>
#include <vector>

#include <json.hpp>

#include "qsim/core/state.hpp"
#include "qsim/optics/config.hpp"

// Six-mode two-photon model. Alice holds modes a_1..a_6, Bob b_1..b_6. Modes
// 1-3 reach Bob's screen through slit x, modes 4-6 through slit y. Rates are
// reported in units of eps_p^2 / 6, the squared pair amplitude.

namespace qsim::optics {

inline constexpr std::size_t kModes = 6;

/// Amplitudes over (Alice mode, Bob mode) pairs; the vacuum term is dropped.
/// Bob's side may carry extra sink modes after a filter.
struct ModeState {
  Matrix amplitudes;
  /// eps_p / sqrt(6), the amplitude every pair term is measured against.
  double pair_amplitude = 0.0;

  /// The normalized two-photon state with dims {alice, bob}.
  PureState to_pure() const;
};

/// (eps_p / sqrt 6) sum_j |j, j>.
ModeState build_spdc_state(double pump_strength);

enum class AlicePoint { F, FPrime, FDoublePrime, L, M };
enum class AlicePlane { Focal, Imaging, None };

const char* to_string(AlicePoint p);
const char* to_string(AlicePlane p);

/// 1 x 6 row mapping Alice's modes onto her detector (the one-photon to vacuum
/// operator): f -> a2 + a5, f' -> a1 + e^{-i w14} a4, f'' -> a3 + e^{-i w36} a6,
/// m -> a1 + a2 + a3, l -> a4 + a5 + a6. Common path phases are dropped.
Matrix alice_measure(AlicePoint point, const OpticsConfig& cfg = {});

/// 1 x 6 row of Bob's field at a point with path phase gamma. Unfiltered, all
/// six modes arrive; filtered, only modes 2 and 5. The spreading angle of
/// `cfg` mixes modes 2 and 5 before they reach the screen.
Matrix bob_field(const OpticsConfig& cfg, double gamma, bool filtered);

/// ||E_alpha E_z |Psi>||^2 in units of eps_p^2 / 6.
double coincidence_rate(const ModeState& state, const Matrix& alice, const Matrix& bob);

struct Pattern {
  std::vector<double> z;
  std::vector<double> phase;  ///< k (r2 - r5) at each z
  std::vector<double> intensity;
  std::string label;
  double visibility = 0.0;
};

/// (max - min) / (max + min); 0 for an all-zero pattern.
double visibility(const std::vector<double>& intensity);

Pattern coincidence_pattern(const OpticsConfig& cfg, AlicePoint point, bool filtered);

/// Bob's singles counts. Focal and Imaging average the coincidence patterns of
/// the plane's canonical points (f, f', f'' or l, m); None traces out Alice.
Pattern singles_pattern(const OpticsConfig& cfg, AlicePlane plane, bool filtered);

struct SpreadingPatterns {
  Pattern singles;  ///< R'_l + R'_m
  Pattern coincident_l;
  Pattern coincident_m;
  Pattern coincident_f;
};

/// Filtered patterns with modes 2 and 5 mixed by cfg.spreading_angle.
SpreadingPatterns spreading_pattern(const OpticsConfig& cfg);

nlohmann::json to_json(const Pattern& p, const OpticsConfig& cfg);

/// CSV with header z_m,intensity,label, 17 significant digits, LF endings.
std::string patterns_csv(const std::vector<Pattern>& patterns);

}  // namespace qsim::optics
