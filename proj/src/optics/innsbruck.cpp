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

#include "qsim/optics/innsbruck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qsim/core/format.hpp"
#include "qsim/core/parallel.hpp"

namespace qsim::optics {

namespace {

Matrix row(std::initializer_list<Complex> entries) {
  Matrix r = Matrix::Zero(1, static_cast<Eigen::Index>(kModes));
  Eigen::Index i = 0;
  for (Complex e : entries) r(0, i++) = e;
  return r;
}

Complex phase_factor(double phi) { return std::polar(1.0, phi); }

// Index of mode j (1-based) in a row.
constexpr Eigen::Index mode(int j) { return j - 1; }

Pattern make_pattern(const OpticsConfig& cfg, std::string label,
                     const std::function<double(double)>& intensity_at_phase) {
  Pattern p;
  p.label = std::move(label);
  p.z = cfg.resolved_z_grid();
  p.phase.resize(p.z.size());
  p.intensity.resize(p.z.size());
  parallel_for(p.z.size(), [&](std::size_t i) {
    p.phase[i] = cfg.phase(p.z[i]);
    p.intensity[i] = intensity_at_phase(p.phase[i]);
  });
  p.visibility = visibility(p.intensity);
  return p;
}

Pattern average(std::string label, const std::vector<Pattern>& parts) {
  Pattern p = parts.front();
  p.label = std::move(label);
  for (std::size_t k = 1; k < parts.size(); ++k)
    for (std::size_t i = 0; i < p.intensity.size(); ++i) p.intensity[i] += parts[k].intensity[i];
  for (double& v : p.intensity) v /= static_cast<double>(parts.size());
  p.visibility = visibility(p.intensity);
  return p;
}

std::string point_label(AlicePoint point, bool filtered) {
  return std::string("R_") + to_string(point) + (filtered ? "_filtered" : "_unfiltered");
}

}  // namespace

PureState ModeState::to_pure() const {
  const auto rows = static_cast<std::size_t>(amplitudes.rows());
  const auto cols = static_cast<std::size_t>(amplitudes.cols());
  Vector v(amplitudes.size());
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b)
      v[static_cast<Eigen::Index>(a * cols + b)] =
          amplitudes(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  return PureState(v, {rows, cols}).renormalized();
}

ModeState build_spdc_state(double pump_strength) {
  if (!(pump_strength > 0.0 && pump_strength < 0.1))
    throw ValidationError("spdc: pump_strength must lie in (0, 0.1)");
  ModeState s;
  s.pair_amplitude = pump_strength / std::sqrt(static_cast<double>(kModes));
  s.amplitudes = Matrix::Identity(kModes, kModes) * s.pair_amplitude;
  return s;
}

const char* to_string(AlicePoint p) {
  switch (p) {
    case AlicePoint::F: return "f";
    case AlicePoint::FPrime: return "f_prime";
    case AlicePoint::FDoublePrime: return "f_double_prime";
    case AlicePoint::L: return "l";
    case AlicePoint::M: return "m";
  }
  return "?";
}

const char* to_string(AlicePlane p) {
  switch (p) {
    case AlicePlane::Focal: return "focal";
    case AlicePlane::Imaging: return "imaging";
    case AlicePlane::None: return "none";
  }
  return "?";
}

Matrix alice_measure(AlicePoint point, const OpticsConfig& cfg) {
  switch (point) {
    case AlicePoint::F: return row({0, 1, 0, 0, 1, 0});
    case AlicePoint::FPrime: return row({1, 0, 0, phase_factor(-cfg.omega14), 0, 0});
    case AlicePoint::FDoublePrime: return row({0, 0, 1, 0, 0, phase_factor(-cfg.omega36)});
    case AlicePoint::M: return row({1, 1, 1, 0, 0, 0});
    case AlicePoint::L: return row({0, 0, 0, 1, 1, 1});
  }
  throw ValidationError("unknown Alice point");
}

Matrix bob_field(const OpticsConfig& cfg, double gamma, bool filtered) {
  // Slit x carries phase +gamma/2, slit y -gamma/2, so k (r2 - r5) = gamma.
  const Complex x = phase_factor(gamma / 2.0);
  const Complex y = phase_factor(-gamma / 2.0);
  Matrix b = filtered ? row({0, x, 0, 0, y, 0}) : row({x, x, x, y, y, y});
  // Spreading: e^{ikr2}(cos b2 + sin b5) + e^{ikr5}(cos b5 - sin b2).
  const double c = std::cos(cfg.spreading_angle);
  const double s = std::sin(cfg.spreading_angle);
  b(0, mode(2)) = c * x - s * y;
  b(0, mode(5)) = s * x + c * y;
  return b;
}

double coincidence_rate(const ModeState& state, const Matrix& alice, const Matrix& bob) {
  if (alice.cols() != state.amplitudes.rows() || bob.cols() != state.amplitudes.cols())
    throw ValidationError("coincidence_rate: field/mode dimension mismatch");
  if (!(state.pair_amplitude > 0.0)) throw ValidationError("coincidence_rate: empty state");
  const Complex amp = (alice * state.amplitudes * bob.transpose())(0, 0) / state.pair_amplitude;
  return std::norm(amp);
}

double visibility(const std::vector<double>& intensity) {
  if (intensity.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(intensity.begin(), intensity.end());
  const double sum = *hi + *lo;
  return sum > 0.0 ? (*hi - *lo) / sum : 0.0;
}

Pattern coincidence_pattern(const OpticsConfig& cfg, AlicePoint point, bool filtered) {
  validate(cfg);
  const ModeState psi = build_spdc_state(cfg.pump_strength);
  const Matrix alice = alice_measure(point, cfg);
  return make_pattern(cfg, point_label(point, filtered), [&](double gamma) {
    return coincidence_rate(psi, alice, bob_field(cfg, gamma, filtered));
  });
}

Pattern singles_pattern(const OpticsConfig& cfg, AlicePlane plane, bool filtered) {
  validate(cfg);
  const std::string label =
      std::string("singles_") + to_string(plane) + (filtered ? "_filtered" : "_unfiltered");
  switch (plane) {
    case AlicePlane::Focal:
      return average(label,
                     {coincidence_pattern(cfg, AlicePoint::F, filtered),
                      coincidence_pattern(cfg, AlicePoint::FPrime, filtered),
                      coincidence_pattern(cfg, AlicePoint::FDoublePrime, filtered)});
    case AlicePlane::Imaging:
      return average(label,
                     {coincidence_pattern(cfg, AlicePoint::L, filtered),
                      coincidence_pattern(cfg, AlicePoint::M, filtered)});
    case AlicePlane::None:
      break;
  }
  // Tracing out Alice: sum of coincidences over her mode basis.
  const ModeState psi = build_spdc_state(cfg.pump_strength);
  return make_pattern(cfg, label, [&](double gamma) {
    const Matrix bob = bob_field(cfg, gamma, filtered);
    double total = 0.0;
    for (std::size_t j = 0; j < kModes; ++j) {
      Matrix a = Matrix::Zero(1, static_cast<Eigen::Index>(kModes));
      a(0, static_cast<Eigen::Index>(j)) = 1.0;
      total += coincidence_rate(psi, a, bob);
    }
    return total;
  });
}

SpreadingPatterns spreading_pattern(const OpticsConfig& cfg) {
  SpreadingPatterns r;
  r.coincident_l = coincidence_pattern(cfg, AlicePoint::L, true);
  r.coincident_m = coincidence_pattern(cfg, AlicePoint::M, true);
  r.coincident_f = coincidence_pattern(cfg, AlicePoint::F, true);
  r.singles = r.coincident_l;
  r.singles.label = "singles_spread";
  for (std::size_t i = 0; i < r.singles.intensity.size(); ++i)
    r.singles.intensity[i] += r.coincident_m.intensity[i];
  r.singles.visibility = visibility(r.singles.intensity);
  return r;
}

nlohmann::json to_json(const Pattern& p, const OpticsConfig& cfg) {
  return {{"label", p.label},
          {"points", p.z.size()},
          {"visibility", p.visibility},
          {"min", p.intensity.empty() ? 0.0 : *std::min_element(p.intensity.begin(), p.intensity.end())},
          {"max", p.intensity.empty() ? 0.0 : *std::max_element(p.intensity.begin(), p.intensity.end())},
          {"units", "eps_p^2/6"},
          {"config_hash", config_hash(cfg)}};
}

std::string patterns_csv(const std::vector<Pattern>& patterns) {
  std::string out = "z_m,intensity,label\n";
  for (const auto& p : patterns)
    for (std::size_t i = 0; i < p.z.size(); ++i) {
      out += format_double(p.z[i]);
      out += ',';
      out += format_double(p.intensity[i]);
      out += ',';
      out += p.label;
      out += '\n';
    }
  return out;
}

}  // namespace qsim::optics
