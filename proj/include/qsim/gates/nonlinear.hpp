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

#include "qsim/core/state.hpp"

// Nonlinear two-qubit gates defined by case tables rather than matrices.
//
// The gate acts independently in every subspace labelled by a computational
// basis configuration of the spectator subsystems. Within a subspace the
// (control, flag) amplitudes must match one table row, up to an overall
// amplitude shared by the two terms and a relative sign of +1 or -1. Anything
// else raises GateDomainError. Relative tolerance for the match is 1e-9.
//
// OR table (flag := f0 OR f1 in both branches):
//   |00> +- |11>  ->  |01> +- |11>
//   |01> +- |10>  ->  |01> +- |11>
//   |01> +- |11>  ->  |01> +- |11>      (fixed point)
//   |00> +- |10>  ->  |00> +- |10>      (fixed point)
//   |ab>          ->  |ab>              (basis states fixed)
//
// AND table (flag := f0 AND f1), the same table with the flag value flipped
// on both sides:
//   |01> +- |10>  ->  |00> +- |10>
//   |00> +- |11>  ->  |00> +- |10>
//   |00> +- |10>  ->  |00> +- |10>
//   |01> +- |11>  ->  |01> +- |11>
//   |ab>          ->  |ab>
namespace qsim::gates {

inline constexpr double kPatternMatchTol = 1e-9;

PureState apply_nonlinear_or(const PureState& state, std::size_t control, std::size_t flag);
PureState apply_nonlinear_and(const PureState& state, std::size_t control, std::size_t flag);

/// Nonlinear counting gate. In each spectator subspace the index qubit and
/// the counter register (qubits, big-endian) must be in
///   a|0>|c0> + s*a|1>|c1>,  s = +-1,
/// which is mapped to a|0>|c0 + c1> + s*a|1>|c0 + c1>. A lone basis term is
/// left fixed. Overflowing the register is a GateDomainError.
PureState apply_nonlinear_count(const PureState& state, std::size_t index_qubit,
                                const Indices& counter);

}  // namespace qsim::gates
