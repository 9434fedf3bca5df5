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

namespace qsim {

struct EnsembleMember {
  double probability;
  DensityOperator state;
};

/// Weighted collection of states on a common space; weights sum to one.
class Ensemble {
 public:
  explicit Ensemble(std::vector<EnsembleMember> members);

  const std::vector<EnsembleMember>& members() const { return members_; }
  /// sum_i p_i rho_i
  DensityOperator average() const;

 private:
  std::vector<EnsembleMember> members_;
};

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// (1/2)||a - b||_1
double trace_distance(const DensityOperator& a, const DensityOperator& b);

/// Base-2 von Neumann entropy of a unit-trace operator. Eigenvalues are
/// clipped at zero before the logarithm.
double von_neumann_entropy(const DensityOperator& rho);

/// Shannon entropy of (p, 1 - p) in bits.
double binary_entropy(double p);

/// S(average) - sum_i p_i S(rho_i), in bits.
double holevo_chi(const Ensemble& ensemble);

/// |<a|b>|^2 / (||a||^2 ||b||^2)
double fidelity(const PureState& a, const PureState& b);

}  // namespace qsim
