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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Subsystem dimensions, big-endian: entry 0 is the leftmost tensor factor.
using Dims = std::vector<std::size_t>;
/// Subsystem positions into a Dims list.
using Indices = std::vector<std::size_t>;

// Tolerance hierarchy shared by every module.
inline constexpr double kStateTol = 1e-12;
inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kPatternTol = 1e-9;
inline constexpr double kZeroNormTol = 1e-15;

inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 14;

/// Bad shapes, out-of-range indices, or parameters violating a precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that is well-posed but degenerates numerically, e.g. an
/// operation that annihilates the state so nothing is left to renormalize.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonlinear gate was handed an amplitude pattern outside its case table.
class GateDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::size_t total_dim(const Dims& dims);

/// Stride of each subsystem in the flat index (big-endian mixed radix).
std::vector<std::size_t> strides(const Dims& dims);

/// Identity matrix of the given size.
Matrix identity(std::size_t dim);

/// Largest singular value; used as the operator norm throughout.
double operator_norm(const Matrix& m);

}  // namespace qsim
