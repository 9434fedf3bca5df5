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

#include <initializer_list>

#include "qsim/core/types.hpp"

namespace qsim {

/// A (possibly unnormalized) state vector on a tensor-product space.
///
/// Non-complete operations leave states with norm different from one; those
/// are kept as-is and reported with `normalized() == false`. Nothing in the
/// core renormalizes implicitly.
class PureState {
 public:
  PureState(Vector amplitudes, Dims dims, std::size_t max_dim = kDefaultMaxDim);
  PureState(std::initializer_list<Complex> amplitudes, Dims dims);

  /// Computational basis ket |index> over `dims`.
  static PureState basis(const Dims& dims, std::size_t index);
  /// n-qubit register in |0...0>.
  static PureState zeros(std::size_t num_qubits);

  const Vector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  std::size_t num_subsystems() const { return dims_.size(); }
  Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  bool normalized() const { return normalized_; }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

  /// Copy divided by its 2-norm. Throws NumericError for a zero vector.
  PureState renormalized() const;

  friend PureState operator+(const PureState& a, const PureState& b);
  friend PureState operator*(Complex scale, const PureState& s);

 private:
  Vector amplitudes_;
  Dims dims_;
  bool normalized_ = false;
};

/// <a|b>
Complex inner(const PureState& a, const PureState& b);

/// Kronecker product, a on the left.
PureState tensor(const PureState& a, const PureState& b);

enum class TraceNorm { Unit, Unnormalized };

/// Hermitian positive semidefinite operator. Unit trace unless tagged
/// `TraceNorm::Unnormalized`.
class DensityOperator {
 public:
  DensityOperator(Matrix matrix, Dims dims, TraceNorm norm = TraceNorm::Unit);

  /// |psi><psi|; tagged unnormalized when the state is.
  static DensityOperator from_pure(const PureState& state);
  static DensityOperator maximally_mixed(const Dims& dims);

  const Matrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  TraceNorm trace_norm() const { return norm_; }
  double trace() const { return matrix_.trace().real(); }

  /// Divides by the trace. Throws NumericError when the trace vanishes.
  DensityOperator normalized() const;

 private:
  Matrix matrix_;
  Dims dims_;
  TraceNorm norm_;
};

}  // namespace qsim
