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

#include "qsim/core/indexing.hpp"

#include <sstream>

namespace qsim {

void validate_subsystems(const Dims& dims, const Indices& subsystems) {
  if (subsystems.empty()) throw ValidationError("no target subsystems given");
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t t : subsystems) {
    if (t >= dims.size()) {
      std::ostringstream msg;
      msg << "subsystem " << t << " out of range (" << dims.size() << " subsystems)";
      throw ValidationError(msg.str());
    }
    if (seen[t]) throw ValidationError("target subsystems must be distinct");
    seen[t] = true;
  }
}

IndexSplit split_indices(const Dims& dims, const Indices& group) {
  validate_subsystems(dims, group);
  IndexSplit s;
  s.group_subsystems = group;
  std::vector<bool> in(dims.size(), false);
  for (std::size_t g : group) in[g] = true;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (!in[i]) s.rest_subsystems.push_back(i);
  for (std::size_t g : s.group_subsystems) s.group_dim *= dims[g];
  for (std::size_t r : s.rest_subsystems) s.rest_dim *= dims[r];

  const std::size_t d = total_dim(dims);
  const auto st = strides(dims);
  s.group.resize(d);
  s.rest.resize(d);
  for (std::size_t flat = 0; flat < d; ++flat) {
    std::size_t ig = 0;
    for (std::size_t k : s.group_subsystems) ig = ig * dims[k] + (flat / st[k]) % dims[k];
    std::size_t ir = 0;
    for (std::size_t k : s.rest_subsystems) ir = ir * dims[k] + (flat / st[k]) % dims[k];
    s.group[flat] = ig;
    s.rest[flat] = ir;
  }
  return s;
}

}  // namespace qsim
