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

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qsim/complexity/oracle.hpp"
#include "qsim/core/state.hpp"

namespace qsim::complexity {

struct Resources {
  std::size_t gate_applications = 0;
  std::size_t oracle_calls = 0;
  std::size_t shots = 0;
};

struct AlgorithmResult {
  bool decision = false;
  std::optional<std::size_t> count;       ///< counting mode
  std::optional<std::size_t> assignment;  ///< a solution, when one is produced
  /// Probability of the outcome that witnesses a "yes" answer (flag = 1, or
  /// a solution string for search).
  double success_probability = 0.0;
  Resources resources;
  nlohmann::json details = nlohmann::json::object();
};

/// 2^{-n/2} sum_x |x>|f(x)>, index qubits first, flag last.
PureState build_sat_state(const BooleanOracle& oracle);

/// Number of G applications: ceil(n / (2 log2(1 + epsilon))).
int g_schedule(std::size_t n, double epsilon);

/// Normalized P(flag = 1) after G(epsilon)^m for an oracle with k solutions:
/// A k 2^-n / ((1 - k 2^-n) + A k 2^-n), A = (1+epsilon)^{2m}.
double g_flag_probability_closed_form(std::size_t n, std::size_t solutions, double epsilon, int m);

/// G^m on the flag of the SAT state, flag measured with renormalization.
/// "Satisfiable" if any of `shots` sampled readouts is 1; an unsatisfiable
/// instance has P(flag = 1) = 0 exactly, so there are no false positives.
AlgorithmResult sat_via_g(const BooleanOracle& oracle, double epsilon, std::size_t shots = 32,
                          std::uint64_t seed = 0);

enum class NondetMode { OrDecision, Count, Qbf };

/// Nonlinear OR (or counting, or alternating OR/AND) applied once per index
/// qubit, pairing it with the flag. Qbf needs a prefix of length n over
/// {'A','E'}; gates are applied innermost quantifier first. Count mode uses
/// an (n+1)-qubit counter register, so 2n + 1 qubits in total.
AlgorithmResult nondet_via_r(const BooleanOracle& oracle, NondetMode mode,
                             const std::string& qbf_prefix = "");

/// Flag-1 term counts after each pairing of the OR algorithm (entry 0 is the
/// initial state).
std::vector<std::size_t> nondet_flag_term_counts(const BooleanOracle& oracle);

/// Post-selects flag = 1 on the SAT state. Throws NumericError when the
/// oracle has no solution.
PureState postselected_state(const BooleanOracle& oracle);

/// One oracle call and one post-selection. The empty branch maps to
/// decision = false; otherwise a solution is drawn from the post-state.
AlgorithmResult sat_via_postselection(const BooleanOracle& oracle, std::uint64_t seed = 0);

struct Q2Simulation {
  bool success = false;
  PureState out_state;  ///< |psi'>|0> / sqrt(N), conditioned on outcome 0
  double success_prob = 0.0;
  double norm_factor = 0.0;  ///< N = <psi'|psi'>
};

/// N = 1 + 2[cos(phi) Re<a|b> - sin(phi) Im<a|b>] for |psi> = |a>|0> + |b>|1>.
double q2_norm_factor(const PureState& state, double phi);

/// Standard-QM stand-in for Q2(phi) on the last qubit: phase gate, Hadamard,
/// measure the last qubit. `success` is a seeded draw with P = N/2. Throws
/// NumericError when N vanishes.
Q2Simulation simulate_q2(const PureState& state, double phi, std::uint64_t seed = 0);

/// sin^2((2k+1) asin(sqrt(M/N))).
double grover_success_closed_form(std::size_t n, std::size_t solutions, std::size_t iterations);

/// Success probability after `iterations` Grover iterations.
double grover_success_probability(const BooleanOracle& oracle, std::size_t iterations);

/// Grover search. success_probability is reported at floor(pi sqrt(N) / 4)
/// iterations. The decision samples `shots_per_iteration` readouts at each
/// iteration count 0..floor(pi sqrt(N)/4) and checks them against the oracle.
AlgorithmResult grover_baseline(const BooleanOracle& oracle, std::size_t shots_per_iteration = 4,
                                std::uint64_t seed = 0);

nlohmann::json to_json(const AlgorithmResult& result);

}  // namespace qsim::complexity
