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

#include "qsim/core/channel.hpp"

// Constructors for the non-standard primitives and the few standard gates the
// protocols need. Each primitive has its own normalization contract, noted on
// the function that applies it.
namespace qsim::gates {

// Standard gates.
Matrix hadamard();
Matrix pauli_x();
Matrix phase_gate(double phi);
/// Control is the first (leftmost) qubit.
Matrix cnot();

/// diag(1, (1 + epsilon)^m). Amplifies the |1> amplitude; not trace preserving.
Matrix g_gate(double epsilon, int m);

/// Rank-one gate |0>(<0| + e^{i phi}<1|).
Matrix constant_q2(double phi);
/// Rank-one gate |0>(<0| + e^{i phi1}<1| + e^{i phi2}<2|).
Matrix constant_q3(double phi1, double phi2);

/// Projector |outcome><outcome| on a `dim`-level system.
Matrix post_select_projector(std::size_t dim, std::size_t outcome);

/// Amplitude-damping style deleter on a qubit (dim 2) or qutrit (dim 3):
/// elements |0><j| for every level j. Always complete.
OperatorSet deleter_channel(std::size_t dim);

/// Embeds `op` on the levels listed in `sector` of a `dim`-level system and
/// acts as the identity on the other levels.
Matrix sector_embed(const Matrix& op, const Indices& sector, std::size_t dim);

struct ConstantGateResult {
  PureState state;          ///< raw output, never renormalized
  double detection_weight;  ///< ||C|psi>||^2, reported even when above 1
  bool supra_normal;        ///< detection_weight > 1
};

/// Applies a constant gate without renormalization.
ConstantGateResult apply_constant_gate(const PureState& state, const Matrix& gate,
                                       const Indices& targets);

/// Deterministic rank-one projection of `target` onto `outcome`, followed by
/// renormalization. Throws NumericError if the projected branch is empty.
PureState post_select(const PureState& state, std::size_t target, std::size_t outcome);

}  // namespace qsim::gates
