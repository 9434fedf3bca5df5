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

#include "qsim/gates/measurement.hpp"

#include <cmath>

#include "qsim/core/channel.hpp"

namespace qsim::gates {

namespace {

void require_orthonormal(const Matrix& basis, std::size_t dim) {
  if (basis.rows() != static_cast<Eigen::Index>(dim) || basis.cols() != basis.rows())
    throw ValidationError("measurement basis has the wrong shape");
  if (operator_norm(basis.adjoint() * basis - identity(dim)) > kCompletenessTol)
    throw ValidationError("measurement basis is not orthonormal");
}

Vector basis_coefficients(const PureState& state, const Matrix& basis) {
  require_orthonormal(basis, state.dim());
  return basis.adjoint() * state.amplitudes();
}

// Full-space outcome lists carry one post-state per outcome, so they are
// limited to modest dimensions.
constexpr std::size_t kMaxOutcomeListDim = 4096;

void require_listable(const PureState& state) {
  if (state.dim() > kMaxOutcomeListDim)
    throw ValidationError("state too large for a full outcome list; measure a subsystem instead");
}

Matrix computational_basis(const PureState& state) {
  require_listable(state);
  return identity(state.dim());
}

}  // namespace

std::vector<MeasurementOutcome> measure_with_renorm(const PureState& state, const Matrix& basis) {
  require_listable(state);
  const Vector c = basis_coefficients(state, basis);
  double total = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) total += std::norm(c[i]);
  if (total < kZeroNormTol * kZeroNormTol) throw NumericError("measuring a zero-norm state");
  std::vector<MeasurementOutcome> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (Eigen::Index i = 0; i < c.size(); ++i)
    out.push_back({static_cast<std::size_t>(i), std::norm(c[i]) / total,
                   PureState(basis.col(i), state.dims())});
  return out;
}

std::vector<MeasurementOutcome> measure_with_renorm(const PureState& state) {
  return measure_with_renorm(state, computational_basis(state));
}

std::vector<MeasurementOutcome> measure_subsystem_with_renorm(const PureState& state,
                                                              std::size_t target,
                                                              const Matrix& basis) {
  if (target >= state.num_subsystems()) throw ValidationError("measured subsystem out of range");
  const std::size_t d = state.dims()[target];
  const Matrix b = basis.size() == 0 ? identity(d) : basis;
  require_orthonormal(b, d);

  const double total = state.norm_squared();
  if (total < kZeroNormTol * kZeroNormTol) throw NumericError("measuring a zero-norm state");

  std::vector<MeasurementOutcome> out;
  for (std::size_t k = 0; k < d; ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const Matrix projector = b.col(col) * b.col(col).adjoint();
    PureState branch = apply_operator(state, projector, {target});
    const double w = branch.norm_squared();
    const double p = w / total;
    if (w > 0.0) branch = branch.renormalized();
    out.push_back({k, p, std::move(branch)});
  }
  return out;
}

std::vector<MeasurementOutcome> p_norm_measure(const PureState& state, double p,
                                               const Matrix& basis) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("p-norm exponent must be >= 0");
  if (!state.normalized()) throw ValidationError("p-norm measurement expects a unit 2-norm state");
  require_listable(state);
  const Vector c = basis_coefficients(state, basis);

  std::vector<double> w(static_cast<std::size_t>(c.size()), 0.0);
  double total = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double a = std::abs(c[i]);
    double wi = 0.0;
    if (p == 2.0) {
      wi = std::norm(c[i]);
    } else if (p == 0.0) {
      wi = a > kZeroNormTol ? 1.0 : 0.0;  // 0^0 := 0
    } else if (a > 0.0) {
      wi = std::pow(a, p);
    }
    w[static_cast<std::size_t>(i)] = wi;
    total += wi;
  }
  if (total <= 0.0) throw NumericError("all amplitudes vanish");

  std::vector<MeasurementOutcome> out;
  out.reserve(w.size());
  for (Eigen::Index i = 0; i < c.size(); ++i)
    out.push_back({static_cast<std::size_t>(i), w[static_cast<std::size_t>(i)] / total,
                   PureState(basis.col(i), state.dims())});
  return out;
}

std::vector<MeasurementOutcome> p_norm_measure(const PureState& state, double p) {
  return p_norm_measure(state, p, computational_basis(state));
}

}  // namespace qsim::gates
