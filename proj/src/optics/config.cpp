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

#include "qsim/optics/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "qsim/core/types.hpp"

namespace qsim::optics {

std::vector<double> OpticsConfig::resolved_z_grid() const {
  if (!z_grid.empty()) return z_grid;
  return symmetric_z_grid(fringe_period(), grid_periods, points_per_period);
}

std::vector<double> symmetric_z_grid(double period, std::size_t periods,
                                     std::size_t points_per_period) {
  if (!(period > 0.0) || periods == 0 || points_per_period < 2)
    throw ValidationError("z grid: need period > 0, periods >= 1, points_per_period >= 2");
  const std::size_t n = periods * points_per_period;
  std::vector<double> z(n + 1);
  const double step = period / static_cast<double>(points_per_period);
  const double half = static_cast<double>(n) / 2.0;
  for (std::size_t i = 0; i <= n; ++i) z[i] = (static_cast<double>(i) - half) * step;
  return z;
}

void validate(const OpticsConfig& cfg) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ValidationError(std::string("optics: ") + name + " must be > 0");
  };
  positive(cfg.wavelength, "wavelength");
  positive(cfg.slit_separation, "slit_separation");
  positive(cfg.screen_distance, "screen_distance");
  positive(cfg.filter_aperture, "filter_aperture");
  positive(cfg.filter_focal_length, "filter_focal_length");
  positive(cfg.imaging_focal_length, "imaging_focal_length");
  positive(cfg.pump_strength, "pump_strength");
  if (!(cfg.pump_strength < 0.1)) throw ValidationError("optics: pump_strength must be < 0.1");
  if (!(cfg.spreading_angle >= 0.0 && cfg.spreading_angle <= std::numbers::pi / 2.0))
    throw ValidationError("optics: spreading_angle must lie in [0, pi/2]");
  if (!std::isfinite(cfg.omega14) || !std::isfinite(cfg.omega36))
    throw ValidationError("optics: omega offsets must be finite");
  if (cfg.z_grid.empty()) {
    if (cfg.grid_periods == 0 || cfg.points_per_period < 2)
      throw ValidationError("optics: grid_periods >= 1 and points_per_period >= 2 required");
  } else {
    for (double z : cfg.z_grid)
      if (!std::isfinite(z)) throw ValidationError("optics: z_grid entries must be finite");
    if (!std::is_sorted(cfg.z_grid.begin(), cfg.z_grid.end()))
      throw ValidationError("optics: z_grid must be sorted");
  }
}

OpticsConfig optics_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("optics config must be an object");
  OpticsConfig cfg;
  auto number = [](const nlohmann::json& v, const std::string& key) {
    if (!v.is_number()) throw ValidationError("optics: " + key + " must be a number");
    return v.get<double>();
  };
  auto count = [](const nlohmann::json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ValidationError("optics: " + key + " must be a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "wavelength") cfg.wavelength = number(v, key);
    else if (key == "slit_separation") cfg.slit_separation = number(v, key);
    else if (key == "screen_distance") cfg.screen_distance = number(v, key);
    else if (key == "filter_aperture") cfg.filter_aperture = number(v, key);
    else if (key == "filter_focal_length") cfg.filter_focal_length = number(v, key);
    else if (key == "imaging_focal_length") cfg.imaging_focal_length = number(v, key);
    else if (key == "spreading_angle") cfg.spreading_angle = number(v, key);
    else if (key == "pump_strength") cfg.pump_strength = number(v, key);
    else if (key == "omega14") cfg.omega14 = number(v, key);
    else if (key == "omega36") cfg.omega36 = number(v, key);
    else if (key == "grid_periods") cfg.grid_periods = count(v, key);
    else if (key == "points_per_period") cfg.points_per_period = count(v, key);
    else if (key == "z_grid") {
      if (!v.is_array()) throw ValidationError("optics: z_grid must be an array");
      cfg.z_grid.clear();
      for (const auto& z : v) cfg.z_grid.push_back(number(z, key));
    } else {
      throw ValidationError("optics: unknown key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

nlohmann::json to_json(const OpticsConfig& cfg) {
  nlohmann::json j = {{"wavelength", cfg.wavelength},
                      {"slit_separation", cfg.slit_separation},
                      {"screen_distance", cfg.screen_distance},
                      {"filter_aperture", cfg.filter_aperture},
                      {"filter_focal_length", cfg.filter_focal_length},
                      {"imaging_focal_length", cfg.imaging_focal_length},
                      {"spreading_angle", cfg.spreading_angle},
                      {"pump_strength", cfg.pump_strength},
                      {"omega14", cfg.omega14},
                      {"omega36", cfg.omega36}};
  if (cfg.z_grid.empty()) {
    j["grid_periods"] = cfg.grid_periods;
    j["points_per_period"] = cfg.points_per_period;
  } else {
    j["z_grid"] = cfg.z_grid;
  }
  return j;
}

std::string config_hash(const OpticsConfig& cfg) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : to_json(cfg).dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qsim::optics
