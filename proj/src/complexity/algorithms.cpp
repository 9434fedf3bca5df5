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

#include "qsim/complexity/algorithms.hpp"

#include <cmath>
#include <numbers>

#include "qsim/core/channel.hpp"
#include "qsim/core/random.hpp"
#include "qsim/gates/measurement.hpp"
#include "qsim/gates/nonlinear.hpp"
#include "qsim/gates/nonstandard.hpp"

namespace qsim::complexity {

namespace {

double flag_one_probability(const PureState& s, std::size_t flag) {
  return gates::measure_subsystem_with_renorm(s, flag)[1].probability;
}

std::size_t count_flag_terms(const PureState& s) {
  std::size_t count = 0;
  for (std::size_t i = 1; i < s.dim(); i += 2)
    if (std::abs(s[i]) > 0.0) ++count;
  return count;
}

void validate_prefix(const BooleanOracle& oracle, const std::string& prefix) {
  if (prefix.size() != oracle.n()) throw ValidationError("QBF prefix length must equal n");
  for (char c : prefix)
    if (c != 'A' && c != 'E') throw ValidationError("QBF prefix must contain only 'A' and 'E'");
}

}  // namespace

PureState build_sat_state(const BooleanOracle& oracle) {
  const std::size_t size = oracle.size();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(2 * size));
  const double amp = 1.0 / std::sqrt(static_cast<double>(size));
  for (std::size_t x = 0; x < size; ++x)
    v[static_cast<Eigen::Index>(2 * x + (oracle(x) ? 1 : 0))] = amp;
  return PureState(std::move(v), Dims(oracle.n() + 1, 2));
}

int g_schedule(std::size_t n, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("epsilon must be > 0");
  return static_cast<int>(std::ceil(static_cast<double>(n) / (2.0 * std::log2(1.0 + epsilon))));
}

double g_flag_probability_closed_form(std::size_t n, std::size_t solutions, double epsilon, int m) {
  const double frac = static_cast<double>(solutions) / std::ldexp(1.0, static_cast<int>(n));
  const double amplified = std::pow(1.0 + epsilon, 2 * m) * frac;
  return amplified / ((1.0 - frac) + amplified);
}

AlgorithmResult sat_via_g(const BooleanOracle& oracle, double epsilon, std::size_t shots,
                          std::uint64_t seed) {
  if (shots < 1) throw ValidationError("sat_via_g: shots must be >= 1");
  const int m = g_schedule(oracle.n(), epsilon);
  const std::size_t flag = oracle.n();
  const PureState amplified = apply_operator(build_sat_state(oracle), gates::g_gate(epsilon, m), {flag});

  AlgorithmResult r;
  r.success_probability = flag_one_probability(amplified, flag);
  std::size_t ones = 0;
  for (std::size_t shot = 0; shot < shots; ++shot) {
    Rng rng = trial_rng(seed, 0, shot);
    std::bernoulli_distribution read(r.success_probability);
    if (read(rng)) ++ones;
  }
  r.decision = ones > 0;
  r.resources = {static_cast<std::size_t>(m), 1, shots};
  r.details = {{"m", m},
               {"epsilon", epsilon},
               {"unnormalized_flag_mass",
                std::pow(1.0 + epsilon, 2 * m) * static_cast<double>(oracle.count()) /
                    static_cast<double>(oracle.size())},
               {"closed_form", g_flag_probability_closed_form(oracle.n(), oracle.count(), epsilon, m)},
               {"ones", ones}};
  return r;
}

std::vector<std::size_t> nondet_flag_term_counts(const BooleanOracle& oracle) {
  PureState s = build_sat_state(oracle);
  std::vector<std::size_t> counts{count_flag_terms(s)};
  for (std::size_t i = 0; i < oracle.n(); ++i) {
    s = gates::apply_nonlinear_or(s, i, oracle.n());
    counts.push_back(count_flag_terms(s));
  }
  return counts;
}

AlgorithmResult nondet_via_r(const BooleanOracle& oracle, NondetMode mode,
                             const std::string& qbf_prefix) {
  const std::size_t n = oracle.n();
  AlgorithmResult r;
  r.resources = {n, 1, 1};

  if (mode == NondetMode::Count) {
    const std::size_t counter_bits = n + 1;
    if (n + counter_bits > 14) throw ValidationError("count mode supports n <= 6 (2n+1 qubits)");
    const std::size_t counter_dim = std::size_t{1} << counter_bits;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(oracle.size() * counter_dim));
    const double amp = 1.0 / std::sqrt(static_cast<double>(oracle.size()));
    for (std::size_t x = 0; x < oracle.size(); ++x)
      v[static_cast<Eigen::Index>(x * counter_dim + (oracle(x) ? 1 : 0))] = amp;
    PureState s(std::move(v), Dims(n + counter_bits, 2));
    Indices counter;
    for (std::size_t c = 0; c < counter_bits; ++c) counter.push_back(n + c);
    for (std::size_t i = 0; i < n; ++i) s = gates::apply_nonlinear_count(s, i, counter);

    // Marginal over counter values; after n pairings it is a point mass.
    std::vector<double> marginal(counter_dim, 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i) marginal[i % counter_dim] += std::norm(s[i]);
    std::size_t best = 0;
    for (std::size_t c = 1; c < counter_dim; ++c)
      if (marginal[c] > marginal[best]) best = c;
    r.count = best;
    r.decision = best > 0;
    r.success_probability = marginal[best];
    r.details = {{"counter_qubits", counter_bits}};
    return r;
  }

  PureState s = build_sat_state(oracle);
  if (mode == NondetMode::OrDecision) {
    std::vector<std::size_t> counts{count_flag_terms(s)};
    for (std::size_t i = 0; i < n; ++i) {
      s = gates::apply_nonlinear_or(s, i, n);
      counts.push_back(count_flag_terms(s));
    }
    r.details = {{"flag_term_counts", counts}};
  } else {
    validate_prefix(oracle, qbf_prefix);
    for (std::size_t i = n; i-- > 0;)
      s = qbf_prefix[i] == 'E' ? gates::apply_nonlinear_or(s, i, n) : gates::apply_nonlinear_and(s, i, n);
    r.details = {{"prefix", qbf_prefix}};
  }
  r.success_probability = flag_one_probability(s, n);
  r.decision = r.success_probability > 0.5;
  return r;
}

PureState postselected_state(const BooleanOracle& oracle) {
  return gates::post_select(build_sat_state(oracle), oracle.n(), 1);
}

AlgorithmResult sat_via_postselection(const BooleanOracle& oracle, std::uint64_t seed) {
  AlgorithmResult r;
  r.resources = {1, 1, 1};
  PureState post = build_sat_state(oracle);
  try {
    post = postselected_state(oracle);
  } catch (const NumericError&) {
    r.decision = false;
    r.success_probability = 0.0;
    r.details = {{"empty_branch", true}};
    return r;
  }
  std::vector<double> weights(oracle.size());
  for (std::size_t x = 0; x < oracle.size(); ++x) weights[x] = std::norm(post[2 * x + 1]);
  Rng rng = trial_rng(seed, 0, 0);
  r.decision = true;
  r.assignment = sample_index(weights, rng);
  r.success_probability = 1.0;
  r.details = {{"empty_branch", false}};
  return r;
}

double q2_norm_factor(const PureState& state, double phi) {
  if (state.num_subsystems() < 1 || state.dims().back() != 2)
    throw ValidationError("Q2 simulation: last subsystem must be a qubit");
  Complex ab = 0.0;
  for (std::size_t i = 0; i < state.dim(); i += 2) ab += std::conj(state[i]) * state[i + 1];
  return 1.0 + 2.0 * (std::cos(phi) * ab.real() - std::sin(phi) * ab.imag());
}

Q2Simulation simulate_q2(const PureState& state, double phi, std::uint64_t seed) {
  if (state.num_subsystems() < 1 || state.dims().back() != 2)
    throw ValidationError("Q2 simulation: last subsystem must be a qubit");
  if (!state.normalized()) throw ValidationError("Q2 simulation: state must be normalized");
  if (!std::isfinite(phi)) throw ValidationError("Q2 simulation: phase must be finite");
  const std::size_t last = state.num_subsystems() - 1;
  PureState s = apply_operator(state, gates::phase_gate(phi), {last});
  s = apply_operator(s, gates::hadamard(), {last});
  auto outcomes = gates::measure_subsystem_with_renorm(s, last);
  const double p0 = outcomes[0].probability;
  if (2.0 * p0 < kZeroNormTol) throw NumericError("Q2 annihilates the state (N = 0)");
  Rng rng = trial_rng(seed, 0, 0);
  std::bernoulli_distribution draw(std::min(1.0, p0));
  return Q2Simulation{draw(rng), std::move(outcomes[0].post_state), p0, 2.0 * p0};
}

double grover_success_closed_form(std::size_t n, std::size_t solutions, std::size_t iterations) {
  const double frac = static_cast<double>(solutions) / std::ldexp(1.0, static_cast<int>(n));
  const double theta = std::asin(std::sqrt(frac));
  return std::pow(std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta), 2);
}

namespace {

constexpr std::size_t kMaxGroverBits = 12;

Vector grover_start(const BooleanOracle& oracle) {
  if (oracle.n() > kMaxGroverBits) throw ValidationError("Grover baseline supports n <= 12");
  const auto size = static_cast<Eigen::Index>(oracle.size());
  return Vector::Constant(size, Complex(1.0 / std::sqrt(static_cast<double>(size)), 0.0));
}

void grover_iteration(const BooleanOracle& oracle, Vector& v) {
  for (Eigen::Index x = 0; x < v.size(); ++x)
    if (oracle(static_cast<std::size_t>(x))) v[x] = -v[x];
  const Complex mean = v.mean();
  for (Eigen::Index x = 0; x < v.size(); ++x) v[x] = 2.0 * mean - v[x];
}

double solution_mass(const BooleanOracle& oracle, const Vector& v) {
  double p = 0.0;
  for (Eigen::Index x = 0; x < v.size(); ++x)
    if (oracle(static_cast<std::size_t>(x))) p += std::norm(v[x]);
  return p;
}

std::size_t standard_iterations(std::size_t n) {
  return static_cast<std::size_t>(std::floor(std::numbers::pi * std::sqrt(std::ldexp(1.0, static_cast<int>(n))) / 4.0));
}

}  // namespace

double grover_success_probability(const BooleanOracle& oracle, std::size_t iterations) {
  Vector v = grover_start(oracle);
  for (std::size_t k = 0; k < iterations; ++k) grover_iteration(oracle, v);
  return solution_mass(oracle, v);
}

AlgorithmResult grover_baseline(const BooleanOracle& oracle, std::size_t shots_per_iteration,
                                std::uint64_t seed) {
  if (shots_per_iteration < 1) throw ValidationError("Grover: shots_per_iteration must be >= 1");
  const std::size_t k_std = standard_iterations(oracle.n());
  Vector v = grover_start(oracle);
  AlgorithmResult r;
  std::vector<double> weights(oracle.size());
  for (std::size_t k = 0; k <= k_std; ++k) {
    if (k > 0) grover_iteration(oracle, v);
    if (k == k_std) r.success_probability = solution_mass(oracle, v);
    if (r.decision) continue;
    for (Eigen::Index x = 0; x < v.size(); ++x) weights[static_cast<std::size_t>(x)] = std::norm(v[x]);
    for (std::size_t shot = 0; shot < shots_per_iteration && !r.decision; ++shot) {
      Rng rng = trial_rng(seed, k, shot);
      const std::size_t x = sample_index(weights, rng);
      ++r.resources.shots;
      ++r.resources.oracle_calls;  // classical check of the readout
      if (oracle(x)) {
        r.decision = true;
        r.assignment = x;
      }
    }
  }
  r.resources.gate_applications = k_std;
  r.resources.oracle_calls += k_std;
  r.details = {{"iterations", k_std},
               {"closed_form", grover_success_closed_form(oracle.n(), oracle.count(), k_std)}};
  return r;
}

nlohmann::json to_json(const AlgorithmResult& result) {
  nlohmann::json j = {{"decision", result.decision},
                      {"success_probability", result.success_probability},
                      {"resources",
                       {{"gate_applications", result.resources.gate_applications},
                        {"oracle_calls", result.resources.oracle_calls},
                        {"shots", result.resources.shots}}},
                      {"details", result.details}};
  if (result.count) j["count"] = *result.count;
  if (result.assignment) j["assignment"] = *result.assignment;
  return j;
}

}  // namespace qsim::complexity
