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

#include "qsim/gates/nonstandard.hpp"

#include <cmath>
#include <numbers>

namespace qsim::gates {

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::numbers::sqrt2;
}

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

Matrix phase_gate(double phi) {
  Matrix p = Matrix::Identity(2, 2);
  p(1, 1) = std::polar(1.0, phi);
  return p;
}

Matrix cnot() {
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(2, 3) = 1.0;
  c(3, 2) = 1.0;
  return c;
}

Matrix g_gate(double epsilon, int m) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw ValidationError("G gate needs epsilon > 0");
  if (m < 1) throw ValidationError("G gate needs m >= 1");
  Matrix g = Matrix::Identity(2, 2);
  g(1, 1) = std::pow(1.0 + epsilon, m);
  return g;
}

Matrix constant_q2(double phi) {
  if (!std::isfinite(phi)) throw ValidationError("phase must be finite");
  Matrix q = Matrix::Zero(2, 2);
  q(0, 0) = 1.0;
  q(0, 1) = std::polar(1.0, phi);
  return q;
}

Matrix constant_q3(double phi1, double phi2) {
  if (!std::isfinite(phi1) || !std::isfinite(phi2)) throw ValidationError("phase must be finite");
  Matrix q = Matrix::Zero(3, 3);
  q(0, 0) = 1.0;
  q(0, 1) = std::polar(1.0, phi1);
  q(0, 2) = std::polar(1.0, phi2);
  return q;
}

Matrix post_select_projector(std::size_t dim, std::size_t outcome) {
  if (outcome >= dim) throw ValidationError("post-selection outcome out of range");
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix p = Matrix::Zero(d, d);
  p(static_cast<Eigen::Index>(outcome), static_cast<Eigen::Index>(outcome)) = 1.0;
  return p;
}

OperatorSet deleter_channel(std::size_t dim) {
  if (dim != 2 && dim != 3) throw ValidationError("deleter is defined for dim 2 or 3");
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<Matrix> kraus;
  for (Eigen::Index j = 0; j < d; ++j) {
    Matrix e = Matrix::Zero(d, d);
    e(0, j) = 1.0;
    kraus.push_back(std::move(e));
  }
  return OperatorSet(std::move(kraus), Completeness::Complete);
}

Matrix sector_embed(const Matrix& op, const Indices& sector, std::size_t dim) {
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != sector.size())
    throw ValidationError("sector operator must be square and match the sector size");
  std::vector<bool> used(dim, false);
  for (std::size_t s : sector) {
    if (s >= dim || used[s]) throw ValidationError("invalid sector level");
    used[s] = true;
  }
  Matrix full = identity(dim);
  for (std::size_t i = 0; i < sector.size(); ++i)
    for (std::size_t j = 0; j < sector.size(); ++j)
      full(static_cast<Eigen::Index>(sector[i]), static_cast<Eigen::Index>(sector[j])) =
          op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return full;
}

ConstantGateResult apply_constant_gate(const PureState& state, const Matrix& gate,
                                       const Indices& targets) {
  PureState out = apply_operator(state, gate, targets);
  const double weight = out.norm_squared();
  return {std::move(out), weight, weight > 1.0 + kStateTol};
}

PureState post_select(const PureState& state, std::size_t target, std::size_t outcome) {
  if (target >= state.num_subsystems()) throw ValidationError("post-selection target out of range");
  const PureState projected =
      apply_operator(state, post_select_projector(state.dims()[target], outcome), {target});
  if (projected.amplitudes().norm() < kZeroNormTol)
    throw NumericError("post-selected branch has zero amplitude");
  return projected.renormalized();
}

}  // namespace qsim::gates
