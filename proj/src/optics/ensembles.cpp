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

#include "qsim/optics/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "qsim/core/metrics.hpp"
#include "qsim/core/serialize.hpp"
#include "qsim/optics/innsbruck.hpp"

namespace qsim::optics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Equal superposition of the listed modes (1-based).
Vector mode_sum(std::initializer_list<int> modes) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(kModes));
  for (int m : modes) v[m - 1] = 1.0;
  return v / std::sqrt(static_cast<double>(modes.size()));
}

struct Mixture {
  Matrix rho;
  Matrix projector_sum;
};

Mixture mixture(const std::vector<Vector>& members, bool unfiltered) {
  Mixture m{Matrix::Zero(kModes, kModes), Matrix::Zero(kModes, kModes)};
  for (Vector v : members) {
    m.projector_sum += v * v.adjoint();
    if (!unfiltered)
      for (int j : {1, 3, 4, 6}) v[j - 1] = 0.0;
    m.rho += v * v.adjoint();
  }
  m.rho /= m.rho.trace().real();
  return m;
}

double integral_defect(const Matrix& integral) {
  return operator_norm(integral - identity(2));
}

}  // namespace

RemoteEnsembles remote_ensembles(bool unfiltered) {
  const Mixture p = mixture({mode_sum({2, 5}), mode_sum({1, 4}), mode_sum({3, 6})}, unfiltered);
  const Mixture q = mixture({mode_sum({1, 2, 3}), mode_sum({4, 5, 6})}, unfiltered);
  RemoteEnsembles r{DensityOperator(p.rho, {kModes}), DensityOperator(q.rho, {kModes})};
  r.trace_dist = trace_distance(r.rho_p, r.rho_q);
  r.defect_p = operator_norm(p.projector_sum - identity(kModes));
  r.defect_q = operator_norm(q.projector_sum - identity(kModes));
  return r;
}

FilterCheck filter_geometry_check(const OpticsConfig& cfg, double margin) {
  validate(cfg);
  if (!(margin > 1.0)) throw ValidationError("filter check: margin must be > 1");
  FilterCheck r;
  r.margin = margin;
  r.aperture_ratio = cfg.filter_aperture / cfg.wavelength;
  r.focal_ratio = (cfg.filter_focal_length / cfg.slit_separation) / r.aperture_ratio;
  r.ok = r.aperture_ratio >= margin && r.focal_ratio >= margin;
  return r;
}

Matrix bob_povm_element(double gamma) {
  Vector v(2);
  v << 1.0, std::polar(1.0, -gamma);
  return v * v.adjoint();
}

PovmIntegral bob_povm_integral(const OpticsConfig& cfg) {
  validate(cfg);
  const std::vector<double> z = cfg.resolved_z_grid();
  if (z.size() < 2) throw ValidationError("povm integral: z grid needs at least two points");
  const double periods = (z.back() - z.front()) / cfg.fringe_period();
  if (periods < 20.0 - 1e-9)
    throw ValidationError("povm integral: z grid must span at least 20 fringe periods");
  PovmIntegral r;
  r.integral = Matrix::Zero(2, 2);
  for (std::size_t i = 1; i < z.size(); ++i)
    r.integral += 0.5 * (z[i] - z[i - 1]) *
                  (bob_povm_element(cfg.phase(z[i])) + bob_povm_element(cfg.phase(z[i - 1])));
  r.integral /= z.back() - z.front();
  r.defect = integral_defect(r.integral);
  r.periods = periods;
  return r;
}

PovmIntegral bob_povm_integral_over_phase(double start, double end, std::size_t points) {
  if (!(end > start) || points < 2)
    throw ValidationError("povm integral: need end > start and at least two points");
  PovmIntegral r;
  r.integral = Matrix::Zero(2, 2);
  const double step = (end - start) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double w = (i == 0 || i + 1 == points) ? 0.5 : 1.0;
    r.integral += w * step * bob_povm_element(start + step * static_cast<double>(i));
  }
  r.integral /= end - start;
  r.defect = integral_defect(r.integral);
  r.periods = (end - start) / kTwoPi;
  return r;
}

OperatorSet direction_filter() {
  Matrix d = Matrix::Zero(kModes + 4, kModes);
  d(1, 1) = 1.0;
  d(4, 4) = 1.0;
  Eigen::Index sink = kModes;
  for (int j : {0, 2, 3, 5}) d(sink++, j) = 1.0;
  return OperatorSet({d}, Completeness::Complete);
}

std::vector<ComplementarityPoint> complementarity_curve(const std::vector<double>& thetas) {
  Matrix cnot = Matrix::Zero(4, 4);
  // Big-endian |system, monitor>; the system controls X on the monitor.
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;
  const PureState input({0.5 * std::numbers::sqrt2, 0.0, 0.5 * std::numbers::sqrt2, 0.0}, {2, 2});
  std::vector<ComplementarityPoint> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    if (!std::isfinite(theta)) throw ValidationError("complementarity: theta must be finite");
    const Matrix u = std::cos(theta) * identity(4) + Complex(0.0, std::sin(theta)) * cnot;
    if (operator_norm(u.adjoint() * u - identity(4)) > kStateTol)
      throw NumericError("complementarity: U is not unitary");
    const PureState evolved = apply_operator(input, u, {0, 1});
    const DensityOperator rho = partial_trace(DensityOperator::from_pure(evolved), {0});
    const std::vector<double> ev = hermitian_eigenvalues(rho.matrix());
    const double prod = std::max(0.0, ev.front() * ev.back());
    out.push_back({theta, 2.0 * std::abs(rho.matrix()(0, 1)), 2.0 * std::sqrt(prod)});
  }
  return out;
}

std::vector<double> complementarity_grid(std::size_t points) {
  if (points < 2) throw ValidationError("complementarity: need at least two grid points");
  std::vector<double> t(points);
  for (std::size_t i = 0; i < points; ++i)
    t[i] = (std::numbers::pi / 2.0) * static_cast<double>(i) / static_cast<double>(points - 1);
  return t;
}

nlohmann::json to_json(const RemoteEnsembles& r) {
  return {{"rho_p", density_to_json(r.rho_p)},
          {"rho_q", density_to_json(r.rho_q)},
          {"trace_dist", r.trace_dist},
          {"defect_p", r.defect_p},
          {"defect_q", r.defect_q}};
}

nlohmann::json to_json(const FilterCheck& r) {
  return {{"ok", r.ok},
          {"aperture_ratio", r.aperture_ratio},
          {"focal_ratio", r.focal_ratio},
          {"margin", r.margin}};
}

nlohmann::json to_json(const PovmIntegral& r) {
  return {{"integral", matrix_to_json(r.integral)}, {"defect", r.defect}, {"periods", r.periods}};
}

}  // namespace qsim::optics
