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

#include <vector>

#include "qsim/core/state.hpp"

namespace qsim::gates {

struct MeasurementOutcome {
  std::size_t outcome_index;
  double probability;
  PureState post_state;
};

/// Projective measurement of the whole state in the orthonormal basis given
/// by the columns of `basis`. The state is divided by its norm first, which
/// is the only place evolution under non-complete gates gets renormalized.
std::vector<MeasurementOutcome> measure_with_renorm(const PureState& state, const Matrix& basis);

/// Same, in the computational basis.
std::vector<MeasurementOutcome> measure_with_renorm(const PureState& state);

/// Measures one subsystem in the columns of `basis` (computational if empty).
/// Post-states are the renormalized projected branches; a branch with zero
/// probability keeps its zero vector.
std::vector<MeasurementOutcome> measure_subsystem_with_renorm(const PureState& state,
                                                              std::size_t target,
                                                              const Matrix& basis = Matrix());

/// Generalized Born rule: P(j) = |a_j|^p / sum_k |a_k|^p with 0^0 := 0, so a
/// vanishing amplitude never contributes, including at p = 0. The state must
/// be normalized in the 2-norm.
std::vector<MeasurementOutcome> p_norm_measure(const PureState& state, double p,
                                               const Matrix& basis);
std::vector<MeasurementOutcome> p_norm_measure(const PureState& state, double p);

}  // namespace qsim::gates
