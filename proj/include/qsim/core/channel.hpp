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

enum class Completeness { Complete, NonComplete, Unchecked };

const char* to_string(Completeness c);

/// Kraus elements sharing one input and one output dimension.
class OperatorSet {
 public:
  /// Claiming `Complete` is verified against the partition of unity and
  /// rejected with ValidationError if it does not hold.
  explicit OperatorSet(std::vector<Matrix> elements,
                       Completeness claimed = Completeness::Unchecked);

  /// Builds the set and records the status `check_completeness` finds.
  static OperatorSet classified(std::vector<Matrix> elements);

  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t input_dim() const { return input_dim_; }
  std::size_t output_dim() const { return output_dim_; }
  Completeness completeness() const { return completeness_; }

 private:
  std::vector<Matrix> elements_;
  std::size_t input_dim_ = 0;
  std::size_t output_dim_ = 0;
  Completeness completeness_;
};

struct CompletenessReport {
  Completeness status;
  /// Operator norm of sum_j e_j^dag e_j - I.
  double defect;
};

CompletenessReport check_completeness(const OperatorSet& ops);

/// Dimensions after `op` acts on `targets`. Only a single target may change
/// its dimension (e.g. an isometry into a larger space).
Dims output_dims(const Dims& dims, const Indices& targets, const Matrix& op);

/// (op (x) I_rest)|state>, no renormalization.
PureState apply_operator(const PureState& state, const Matrix& op, const Indices& targets);

/// Full-space matrix of `op` acting on `targets` of a system with `dims`.
Matrix embed_operator(const Matrix& op, const Dims& dims, const Indices& targets);

/// Reduced operator on `keep`, in the order given.
DensityOperator partial_trace(const DensityOperator& rho, const Indices& keep);

struct ChannelResult {
  DensityOperator state;  ///< renormalized output
  double norm;            ///< trace of the unnormalized map output
};

/// sum_j E_j rho E_j^dag with E_j = e_j on `targets`. Throws NumericError when
/// the output trace is below kZeroNormTol.
ChannelResult apply_channel(const DensityOperator& rho, const OperatorSet& ops,
                            const Indices& targets);

}  // namespace qsim
