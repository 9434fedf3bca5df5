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

#include "qsim/core/types.hpp"

namespace qsim {

/// Flat index decomposed into a position within a group of subsystems and a
/// position within the remaining ones, both big-endian in subsystem order.
struct IndexSplit {
  Indices group_subsystems;
  Indices rest_subsystems;
  std::size_t group_dim = 1;
  std::size_t rest_dim = 1;
  std::vector<std::size_t> group;  ///< per flat index
  std::vector<std::size_t> rest;   ///< per flat index
};

/// Throws ValidationError on empty, repeated, or out-of-range subsystems.
void validate_subsystems(const Dims& dims, const Indices& subsystems);

IndexSplit split_indices(const Dims& dims, const Indices& group);

}  // namespace qsim
