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

#include <cstdint>
#include <random>

#include "qsim/core/channel.hpp"

namespace qsim {

using Rng = std::mt19937_64;

/// Independent generator for one trial. Streams depend only on
/// (seed, stream, index) so trials can run in any order.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
Matrix haar_unitary(std::size_t dim, Rng& rng);

/// Haar-random normalized pure state.
PureState random_state(const Dims& dims, Rng& rng);

/// Random complete channel on a `dim`-level system with `kraus_count`
/// elements, read off the first `dim` columns of a Haar unitary on
/// dim * kraus_count levels.
OperatorSet random_complete_channel(std::size_t dim, std::size_t kraus_count, Rng& rng);

/// Draws an index from a discrete distribution given by nonnegative weights.
std::size_t sample_index(const std::vector<double>& weights, Rng& rng);

}  // namespace qsim
