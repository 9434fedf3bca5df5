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

#include "qsim/core/channel.hpp"

#include <sstream>

#include "qsim/core/indexing.hpp"

namespace qsim {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::Complete: return "Complete";
    case Completeness::NonComplete: return "NonComplete";
    case Completeness::Unchecked: return "Unchecked";
  }
  return "?";
}

OperatorSet::OperatorSet(std::vector<Matrix> elements, Completeness claimed)
    : elements_(std::move(elements)), completeness_(claimed) {
  if (elements_.empty()) throw ValidationError("operator set is empty");
  input_dim_ = static_cast<std::size_t>(elements_.front().cols());
  output_dim_ = static_cast<std::size_t>(elements_.front().rows());
  for (const Matrix& e : elements_) {
    if (static_cast<std::size_t>(e.cols()) != input_dim_ ||
        static_cast<std::size_t>(e.rows()) != output_dim_)
      throw ValidationError("operator set elements have mismatched shapes");
  }
  if (claimed == Completeness::Complete &&
      check_completeness(*this).status != Completeness::Complete)
    throw ValidationError("operator set claimed complete but sum e^dag e != I");
}

OperatorSet OperatorSet::classified(std::vector<Matrix> elements) {
  OperatorSet ops(std::move(elements));
  ops.completeness_ = check_completeness(ops).status;
  return ops;
}

CompletenessReport check_completeness(const OperatorSet& ops) {
  Matrix sum = Matrix::Zero(ix(ops.input_dim()), ix(ops.input_dim()));
  for (const Matrix& e : ops.elements()) sum += e.adjoint() * e;
  const double defect = operator_norm(sum - identity(ops.input_dim()));
  return {defect < kCompletenessTol ? Completeness::Complete : Completeness::NonComplete, defect};
}

Dims output_dims(const Dims& dims, const Indices& targets, const Matrix& op) {
  validate_subsystems(dims, targets);
  std::size_t in = 1;
  for (std::size_t t : targets) in *= dims[t];
  if (static_cast<std::size_t>(op.cols()) != in) {
    std::ostringstream msg;
    msg << "operator has " << op.cols() << " columns but targets span " << in << " levels";
    throw ValidationError(msg.str());
  }
  Dims out = dims;
  if (static_cast<std::size_t>(op.rows()) != in) {
    if (targets.size() != 1)
      throw ValidationError("dimension-changing operator must act on a single subsystem");
    out[targets.front()] = static_cast<std::size_t>(op.rows());
  }
  return out;
}

PureState apply_operator(const PureState& state, const Matrix& op, const Indices& targets) {
  const Dims new_dims = output_dims(state.dims(), targets, op);

  const IndexSplit in = split_indices(state.dims(), targets);
  Matrix grid = Matrix::Zero(ix(in.group_dim), ix(in.rest_dim));
  for (std::size_t flat = 0; flat < state.dim(); ++flat)
    grid(ix(in.group[flat]), ix(in.rest[flat])) = state[flat];

  const Matrix out_grid = op * grid;

  const IndexSplit out = split_indices(new_dims, targets);
  Vector amps(ix(out.group.size()));
  for (std::size_t flat = 0; flat < out.group.size(); ++flat)
    amps[ix(flat)] = out_grid(ix(out.group[flat]), ix(out.rest[flat]));
  return PureState(std::move(amps), new_dims);
}

Matrix embed_operator(const Matrix& op, const Dims& dims, const Indices& targets) {
  const Dims new_dims = output_dims(dims, targets, op);
  const std::size_t d_in = total_dim(dims);
  Matrix full(ix(total_dim(new_dims)), ix(d_in));
  for (std::size_t c = 0; c < d_in; ++c)
    full.col(ix(c)) = apply_operator(PureState::basis(dims, c), op, targets).amplitudes();
  return full;
}

DensityOperator partial_trace(const DensityOperator& rho, const Indices& keep) {
  const IndexSplit s = split_indices(rho.dims(), keep);

  Dims kept_dims;
  for (std::size_t k : keep) kept_dims.push_back(rho.dims()[k]);

  Matrix red = Matrix::Zero(ix(s.group_dim), ix(s.group_dim));
  const Matrix& m = rho.matrix();
  const std::size_t d = rho.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (s.rest[i] != s.rest[j]) continue;
      red(ix(s.group[i]), ix(s.group[j])) += m(ix(i), ix(j));
    }
  }
  return DensityOperator(std::move(red), std::move(kept_dims), rho.trace_norm());
}

ChannelResult apply_channel(const DensityOperator& rho, const OperatorSet& ops,
                            const Indices& targets) {
  const Dims new_dims = output_dims(rho.dims(), targets, ops.elements().front());
  const auto d_out = ix(total_dim(new_dims));
  Matrix out = Matrix::Zero(d_out, d_out);
  for (const Matrix& e : ops.elements()) {
    const Matrix full = embed_operator(e, rho.dims(), targets);
    out += full * rho.matrix() * full.adjoint();
  }
  out = ((out + out.adjoint()) / 2.0).eval();
  const double norm = out.trace().real();
  if (norm <= kZeroNormTol) throw NumericError("channel annihilated the state");
  return {DensityOperator(out / norm, new_dims), norm};
}

}  // namespace qsim
