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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qsim/core/random.hpp"
#include "qsim/core/state.hpp"

namespace qsim::testing {

inline const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

inline ::testing::AssertionResult matrices_near(const Matrix& actual, const Matrix& expected,
                                                double tol) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols())
    return ::testing::AssertionFailure()
           << "shape " << actual.rows() << "x" << actual.cols() << " vs " << expected.rows() << "x"
           << expected.cols();
  const double diff = (actual - expected).cwiseAbs().maxCoeff();
  if (diff > tol)
    return ::testing::AssertionFailure() << "max |diff| = " << diff << " > " << tol << "\nactual:\n"
                                         << actual << "\nexpected:\n"
                                         << expected;
  return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult states_near(const PureState& actual, const Vector& expected,
                                              double tol) {
  return matrices_near(actual.amplitudes(), expected, tol);
}

inline Matrix diag(std::initializer_list<double> entries) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(entries.size()),
                          static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (Complex e : entries) v[i++] = e;
  return v;
}

/// Random full-rank density operator from a Ginibre matrix.
inline DensityOperator random_density(const Dims& dims, Rng& rng) {
  const std::size_t d = total_dim(dims);
  std::normal_distribution<double> normal;
  Matrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityOperator(rho, dims);
}

}  // namespace qsim::testing
