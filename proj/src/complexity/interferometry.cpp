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

#include "qsim/complexity/interferometry.hpp"

#include <cmath>
#include <numbers>

#include "qsim/gates/nonstandard.hpp"

namespace qsim::complexity {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t single_marked(const BooleanOracle& oracle) {
  const auto sol = oracle.solutions();
  if (sol.size() != 1) throw ValidationError("interferometric search needs exactly one marked state");
  return sol.front();
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

}  // namespace

PureState interferometer_state(const BooleanOracle& oracle) {
  const std::size_t marked = single_marked(oracle);
  const std::size_t size = oracle.size();
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));
  Vector v(static_cast<Eigen::Index>(2 * size));
  for (std::size_t x = 0; x < size; ++x) {
    v[static_cast<Eigen::Index>(x)] = amp;                                    // arm 0: |a>
    v[static_cast<Eigen::Index>(size + x)] = x == marked ? amp : -amp;  // arm 1: |b>
  }
  return PureState(std::move(v), {2, size});
}

double fringe_intensity(const BooleanOracle& oracle, double theta) {
  return gates::apply_constant_gate(interferometer_state(oracle), gates::constant_q2(theta), {0})
      .detection_weight;
}

double fringe_closed_form(std::size_t n, double theta) {
  return 2.0 - 2.0 * (1.0 - std::ldexp(1.0, 1 - static_cast<int>(n))) * std::cos(theta);
}

double gaussian_ratio_closed_form(std::size_t n, double sigma) {
  return 1.0 - (1.0 - std::ldexp(1.0, 1 - static_cast<int>(n))) * std::exp(-sigma * sigma / 2.0);
}

InterferometryResult interferometric_search(const BooleanOracle& oracle,
                                            const InterferometryOptions& options) {
  if (options.theta_points < 3) throw ValidationError("interferometry: need at least 3 theta points");
  if (!(options.sigma > 0.0) || !std::isfinite(options.sigma))
    throw ValidationError("interferometry: sigma must be > 0");
  InterferometryResult r;
  r.n = oracle.n();
  r.marked = single_marked(oracle);
  r.sigma = options.sigma;

  const PureState psi = interferometer_state(oracle);
  auto intensity = [&](double theta) {
    return gates::apply_constant_gate(psi, gates::constant_q2(theta), {0}).detection_weight;
  };
  r.detect_prob = intensity(0.0);
  r.dark = r.detect_prob;
  r.bright = intensity(std::numbers::pi);

  std::vector<double> thetas, values;
  for (std::size_t i = 0; i < options.theta_points; ++i) {
    const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(options.theta_points - 1);
    thetas.push_back(t);
    values.push_back(intensity(t));
    r.fringe.push_back({t, values.back()});
  }
  r.period_mean = trapezoid(thetas, values) / kTwoPi;

  // Gaussian envelope over +-8 sigma, sampled finely enough to resolve fringes.
  const double span = 8.0 * options.sigma;
  const auto steps = static_cast<std::size_t>(std::ceil(2.0 * span / kTwoPi * 256.0));
  std::vector<double> gx, weighted, reference;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(steps);
    const double k2 = std::exp(-t * t / (2.0 * options.sigma * options.sigma));
    gx.push_back(t);
    weighted.push_back(k2 * intensity(t));
    reference.push_back(k2 * psi.norm_squared());
  }
  r.gaussian_ratio = trapezoid(gx, weighted) / trapezoid(gx, reference);
  return r;
}

nlohmann::json to_json(const InterferometryResult& r) {
  nlohmann::json theta = nlohmann::json::array(), inten = nlohmann::json::array();
  for (const auto& p : r.fringe) {
    theta.push_back(p.theta);
    inten.push_back(p.intensity);
  }
  return {{"n", r.n},
          {"marked", r.marked},
          {"detect_prob", r.detect_prob},
          {"dark", r.dark},
          {"bright", r.bright},
          {"period_mean", r.period_mean},
          {"gaussian_ratio", r.gaussian_ratio},
          {"sigma", r.sigma},
          {"fringe", {{"theta", theta}, {"intensity", inten}}}};
}

}  // namespace qsim::complexity
