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

#include "qsim/core/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace qsim {

Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return g;
}

}  // namespace

Matrix haar_unitary(std::size_t dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Multiply column j by the phase of r_jj so the distribution is Haar.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

PureState random_state(const Dims& dims, Rng& rng) {
  const Matrix g = ginibre(total_dim(dims), 1, rng);
  Vector v = g.col(0);
  v /= v.norm();
  return PureState(std::move(v), dims);
}

OperatorSet random_complete_channel(std::size_t dim, std::size_t kraus_count, Rng& rng) {
  if (dim == 0 || kraus_count == 0) throw ValidationError("channel needs positive dimensions");
  const Matrix u = haar_unitary(dim * kraus_count, rng);
  const auto d = static_cast<Eigen::Index>(dim);
  // Isometry V = U[:, :dim]; Kraus element j is the j-th dim x dim row block.
  std::vector<Matrix> kraus;
  kraus.reserve(kraus_count);
  for (std::size_t j = 0; j < kraus_count; ++j)
    kraus.emplace_back(u.block(static_cast<Eigen::Index>(j) * d, 0, d, d));
  return OperatorSet(std::move(kraus), Completeness::Complete);
}

std::size_t sample_index(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ValidationError("negative sampling weight");
    total += w;
  }
  if (total <= 0.0) throw NumericError("cannot sample from an all-zero distribution");
  std::uniform_real_distribution<double> uni(0.0, total);
  const double u = uni(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  // u landed on the top edge through rounding; return the last nonzero entry.
  for (std::size_t i = weights.size(); i-- > 0;)
    if (weights[i] > 0.0) return i;
  return weights.size() - 1;
}

}  // namespace qsim
