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

#include "qsim/gates/nonlinear.hpp"

#include <cmath>
#include <sstream>

#include "qsim/core/indexing.hpp"

namespace qsim::gates {

namespace {

struct Term {
  std::size_t control;  // value of the paired index/control qubit
  std::size_t target;   // value of the flag or counter register
  Complex amplitude;
};

// Nonzero terms of one spectator subspace, relative to its largest amplitude.
std::vector<Term> nonzero_terms(const std::vector<Complex>& block, std::size_t target_dim) {
  double scale = 0.0;
  for (Complex a : block) scale = std::max(scale, std::abs(a));
  std::vector<Term> terms;
  if (scale == 0.0) return terms;
  for (std::size_t i = 0; i < block.size(); ++i)
    if (std::abs(block[i]) > kPatternMatchTol * scale)
      terms.push_back({i / target_dim, i % target_dim, block[i]});
  return terms;
}

// Two terms with control values 0 and 1 whose amplitudes agree up to a sign.
bool is_balanced_pair(const std::vector<Term>& t) {
  if (t.size() != 2 || t[0].control != 0 || t[1].control != 1) return false;
  const Complex ratio = t[1].amplitude / t[0].amplitude;
  return std::abs(ratio - 1.0) <= kPatternMatchTol || std::abs(ratio + 1.0) <= kPatternMatchTol;
}

[[noreturn]] void domain_failure(const char* gate, std::size_t subspace) {
  std::ostringstream msg;
  msg << gate << ": amplitudes in spectator subspace " << subspace
      << " match no case of the gate table";
  throw GateDomainError(msg.str());
}

// Shared driver: in every spectator subspace, a balanced pair
// |0, v0> + s|1, v1> becomes |0, g> + s|1, g> with g = combine(v0, v1);
// single basis terms stay put; anything else is outside the domain.
template <typename Combine>
PureState rewrite_pairs(const PureState& state, std::size_t control, const Indices& register_qubits,
                        const char* gate, Combine combine) {
  Indices group{control};
  group.insert(group.end(), register_qubits.begin(), register_qubits.end());
  for (std::size_t q : group) {
    if (q >= state.num_subsystems() || state.dims()[q] != 2)
      throw ValidationError(std::string(gate) + ": gate acts on qubits only");
  }
  const IndexSplit split = split_indices(state.dims(), group);
  const std::size_t register_dim = split.group_dim / 2;

  // flat positions indexed by (rest, group)
  std::vector<std::size_t> position(split.rest_dim * split.group_dim);
  for (std::size_t flat = 0; flat < split.group.size(); ++flat)
    position[split.rest[flat] * split.group_dim + split.group[flat]] = flat;

  Vector out = state.amplitudes();
  std::vector<Complex> block(split.group_dim);
  for (std::size_t r = 0; r < split.rest_dim; ++r) {
    for (std::size_t g = 0; g < split.group_dim; ++g)
      block[g] = state[position[r * split.group_dim + g]];
    const std::vector<Term> terms = nonzero_terms(block, register_dim);
    if (terms.size() <= 1) continue;
    if (!is_balanced_pair(terms)) domain_failure(gate, r);

    const std::size_t merged = combine(terms[0].target, terms[1].target, register_dim, r);
    for (std::size_t g = 0; g < split.group_dim; ++g)
      out[static_cast<Eigen::Index>(position[r * split.group_dim + g])] = 0.0;
    out[static_cast<Eigen::Index>(position[r * split.group_dim + merged])] = terms[0].amplitude;
    out[static_cast<Eigen::Index>(position[r * split.group_dim + register_dim + merged])] =
        terms[1].amplitude;
  }
  return PureState(std::move(out), state.dims());
}

}  // namespace

PureState apply_nonlinear_or(const PureState& state, std::size_t control, std::size_t flag) {
  if (control == flag) throw ValidationError("nonlinear OR: control and flag must differ");
  return rewrite_pairs(state, control, {flag}, "nonlinear OR",
                       [](std::size_t f0, std::size_t f1, std::size_t, std::size_t) {
                         return f0 | f1;
                       });
}

PureState apply_nonlinear_and(const PureState& state, std::size_t control, std::size_t flag) {
  if (control == flag) throw ValidationError("nonlinear AND: control and flag must differ");
  return rewrite_pairs(state, control, {flag}, "nonlinear AND",
                       [](std::size_t f0, std::size_t f1, std::size_t, std::size_t) {
                         return f0 & f1;
                       });
}

PureState apply_nonlinear_count(const PureState& state, std::size_t index_qubit,
                                const Indices& counter) {
  if (counter.empty()) throw ValidationError("nonlinear count: empty counter register");
  for (std::size_t c : counter)
    if (c == index_qubit) throw ValidationError("nonlinear count: index qubit inside the counter");
  return rewrite_pairs(state, index_qubit, counter, "nonlinear count",
                       [](std::size_t c0, std::size_t c1, std::size_t register_dim,
                          std::size_t subspace) {
                         const std::size_t sum = c0 + c1;
                         if (sum >= register_dim) {
                           std::ostringstream msg;
                           msg << "nonlinear count: counter overflow in subspace " << subspace;
                           throw GateDomainError(msg.str());
                         }
                         return sum;
                       });
}

}  // namespace qsim::gates
