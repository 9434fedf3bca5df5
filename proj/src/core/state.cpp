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

#include "qsim/core/state.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qsim {

std::size_t total_dim(const Dims& dims) {
  std::size_t d = 1;
  for (std::size_t x : dims) {
    if (x == 0) throw ValidationError("subsystem dimension must be positive");
    d *= x;
  }
  return d;
}

std::vector<std::size_t> strides(const Dims& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

Matrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Matrix::Identity(n, n);
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

PureState::PureState(Vector amplitudes, Dims dims, std::size_t max_dim)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty()) throw ValidationError("state needs at least one subsystem");
  const std::size_t d = total_dim(dims_);
  if (d != static_cast<std::size_t>(amplitudes_.size())) {
    std::ostringstream msg;
    msg << "product of dims (" << d << ") != amplitude count (" << amplitudes_.size() << ")";
    throw ValidationError(msg.str());
  }
  if (d > max_dim) {
    std::ostringstream msg;
    msg << "state dimension " << d << " exceeds limit " << max_dim;
    throw ValidationError(msg.str());
  }
  normalized_ = std::abs(amplitudes_.norm() - 1.0) <= kStateTol;
}

PureState::PureState(std::initializer_list<Complex> amplitudes, Dims dims)
    : PureState(
          [&] {
            Vector v(static_cast<Eigen::Index>(amplitudes.size()));
            Eigen::Index i = 0;
            for (Complex a : amplitudes) v[i++] = a;
            return v;
          }(),
          std::move(dims)) {}

PureState PureState::basis(const Dims& dims, std::size_t index) {
  const std::size_t d = total_dim(dims);
  if (index >= d) throw ValidationError("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return PureState(std::move(v), dims);
}

PureState PureState::zeros(std::size_t num_qubits) {
  return basis(Dims(num_qubits, 2), 0);
}

PureState PureState::renormalized() const {
  const double n = amplitudes_.norm();
  if (n < kZeroNormTol) throw NumericError("cannot renormalize a zero state");
  return PureState(amplitudes_ / n, dims_);
}

PureState operator+(const PureState& a, const PureState& b) {
  if (a.dims_ != b.dims_) throw ValidationError("adding states with different dims");
  return PureState(a.amplitudes_ + b.amplitudes_, a.dims_);
}

PureState operator*(Complex scale, const PureState& s) {
  return PureState(scale * s.amplitudes_, s.dims_);
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims()) throw ValidationError("inner product of states with different dims");
  return a.amplitudes().dot(b.amplitudes());
}

PureState tensor(const PureState& a, const PureState& b) {
  Vector v(static_cast<Eigen::Index>(a.dim() * b.dim()));
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    v.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()[i] * b.amplitudes();
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState(std::move(v), std::move(dims));
}

DensityOperator::DensityOperator(Matrix matrix, Dims dims, TraceNorm norm)
    : matrix_(std::move(matrix)), dims_(std::move(dims)), norm_(norm) {
  if (matrix_.rows() != matrix_.cols()) throw ValidationError("density operator must be square");
  if (total_dim(dims_) != static_cast<std::size_t>(matrix_.rows()))
    throw ValidationError("product of dims does not match density operator size");

  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kStateTol * scale)
    throw ValidationError("density operator is not Hermitian");

  const double tr = matrix_.trace().real();
  if (norm_ == TraceNorm::Unit && std::abs(tr - 1.0) > kStateTol)
    throw ValidationError("density operator trace differs from 1");

  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStateTol * scale)
    throw ValidationError("density operator has a negative eigenvalue");
}

DensityOperator DensityOperator::from_pure(const PureState& state) {
  const Vector& a = state.amplitudes();
  return DensityOperator(a * a.adjoint(), state.dims(),
                         state.normalized() ? TraceNorm::Unit : TraceNorm::Unnormalized);
}

DensityOperator DensityOperator::maximally_mixed(const Dims& dims) {
  const std::size_t d = total_dim(dims);
  return DensityOperator(identity(d) / static_cast<double>(d), dims);
}

DensityOperator DensityOperator::normalized() const {
  const double tr = trace();
  if (tr < kZeroNormTol) throw NumericError("cannot normalize a zero-trace operator");
  return DensityOperator(matrix_ / tr, dims_);
}

}  // namespace qsim
