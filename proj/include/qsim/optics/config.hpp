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

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

// Geometry of the two-photon double-slit setup. All lengths are in meters.

namespace qsim::optics {

struct OpticsConfig {
  double wavelength = 700e-9;
  double slit_separation = 100e-6;
  double screen_distance = 1.0;
  double filter_aperture = 50e-6;
  double filter_focal_length = 1.0;
  double imaging_focal_length = 0.5;
  double spreading_angle = 0.0;
  double pump_strength = 0.01;
  /// Focal-plane phase offsets of the f' and f'' points. Equal spacing makes
  /// the three shifted fringe patterns cancel in the unfiltered singles.
  double omega14 = 2.0 * std::numbers::pi / 3.0;
  double omega36 = 4.0 * std::numbers::pi / 3.0;
  /// Used to build a symmetric grid when z_grid is empty.
  std::size_t grid_periods = 20;
  std::size_t points_per_period = 64;
  std::vector<double> z_grid;

  double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }
  /// Screen distance between adjacent bright fringes, lambda L / sigma.
  double fringe_period() const { return wavelength * screen_distance / slit_separation; }
  /// Path phase difference k (r2 - r5) at screen coordinate z.
  double phase(double z) const { return wavenumber() * slit_separation * z / screen_distance; }
  /// z_grid, or the generated symmetric grid when none was given.
  std::vector<double> resolved_z_grid() const;
};

/// `periods * points_per_period + 1` points centered on 0, spanning `periods`
/// whole fringe periods.
std::vector<double> symmetric_z_grid(double period, std::size_t periods,
                                     std::size_t points_per_period);

/// Throws ValidationError when lengths are not positive, the pump is not
/// weak, the spreading angle is outside [0, pi/2] or the grid is unsorted.
void validate(const OpticsConfig& cfg);

/// Reads the fields by name; unknown keys are rejected. The result is validated.
OpticsConfig optics_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OpticsConfig& cfg);

/// FNV-1a hash of the serialized config, as 16 hex digits.
std::string config_hash(const OpticsConfig& cfg);

}  // namespace qsim::optics
