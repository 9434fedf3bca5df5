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

#include "qsim/core/metrics.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace qsim {

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("ensemble is empty");
  double total = 0.0;
  for (const auto& m : members_) {
    if (!(m.probability >= 0.0 && m.probability <= 1.0))
      throw ValidationError("ensemble weight outside [0, 1]");
    if (m.state.dims() != members_.front().state.dims())
      throw ValidationError("ensemble members live on different spaces");
    total += m.probability;
  }
  if (std::abs(total - 1.0) > kStateTol) throw ValidationError("ensemble weights do not sum to 1");
}

DensityOperator Ensemble::average() const {
  const auto& first = members_.front().state;
  Matrix sum = Matrix::Zero(first.matrix().rows(), first.matrix().cols());
  for (const auto& m : members_) sum += m.probability * m.state.matrix();
  return DensityOperator(std::move(sum), first.dims());
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dims() != b.dims()) throw ValidationError("trace distance between different spaces");
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(a.matrix() - b.matrix())) sum += std::abs(ev);
  return 0.5 * sum;
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(rho.matrix())) {
    if (ev > 0.0) s -= ev * std::log2(ev);
  }
  return s;
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double holevo_chi(const Ensemble& ensemble) {
  double chi = von_neumann_entropy(ensemble.average());
  for (const auto& m : ensemble.members()) chi -= m.probability * von_neumann_entropy(m.state);
  return chi;
}

double fidelity(const PureState& a, const PureState& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na < kZeroNormTol || nb < kZeroNormTol) throw NumericError("fidelity with a zero state");
  return std::norm(inner(a, b)) / (na * nb);
}

}  // namespace qsim
