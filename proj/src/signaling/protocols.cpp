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

#include "qsim/signaling/protocols.hpp"

#include <cmath>
#include <numbers>

#include "qsim/core/channel.hpp"
#include "qsim/core/metrics.hpp"
#include "qsim/core/parallel.hpp"
#include "qsim/core/random.hpp"
#include "qsim/gates/measurement.hpp"
#include "qsim/gates/nonlinear.hpp"
#include "qsim/gates/nonstandard.hpp"

namespace qsim::signaling {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

DensityOperator bob_state(const PureState& joint) {
  return partial_trace(DensityOperator::from_pure(joint), {1}).normalized();
}

Matrix g_power(double epsilon, int m) {
  if (m < 0) throw ValidationError("G signal: m must be >= 0");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("G signal: epsilon must be > 0");
  return m == 0 ? identity(2) : gates::g_gate(epsilon, m);
}

Matrix diagonal_basis() { return gates::hadamard(); }

// Branches of the R protocol after Alice's measurement, as (probability,
// Alice-Bob-ancilla state after Bob's CNOT and R).
std::vector<std::pair<double, PureState>> r_branches(bool diagonal) {
  const PureState shared({kInvSqrt2, 0.0, 0.0, -kInvSqrt2}, {2, 2});
  const PureState joint = tensor(shared, PureState::basis({2}, 0));
  const Matrix basis = diagonal ? diagonal_basis() : identity(2);
  std::vector<std::pair<double, PureState>> out;
  for (const auto& o : gates::measure_subsystem_with_renorm(joint, 0, basis)) {
    if (o.probability == 0.0) continue;
    PureState s = apply_operator(o.post_state, gates::cnot(), {1, 2});
    s = gates::apply_nonlinear_or(s, 1, 2);
    out.emplace_back(o.probability, std::move(s));
  }
  // Alice's outcome distribution, renormalized against rounding in the input.
  double total = 0.0;
  for (const auto& b : out) total += b.first;
  for (auto& b : out) b.first /= total;
  return out;
}

double ancilla_one_probability(const PureState& s) {
  return gates::measure_subsystem_with_renorm(s, 2)[1].probability;
}

DensityOperator ancilla_state(bool diagonal) {
  Matrix avg = Matrix::Zero(2, 2);
  for (const auto& [p, s] : r_branches(diagonal))
    avg += p * partial_trace(DensityOperator::from_pure(s), {2}).matrix();
  return DensityOperator(avg, {2});
}

void require_theta_open(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2))
    throw ValidationError("p-norm signal: theta must lie in (0, pi/2)");
}

void require_p(double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("p-norm signal: p must be >= 0");
}

// Bob's state as the outcome-weighted mixture of his conditional states.
DensityOperator bob_mixture(const std::vector<gates::MeasurementOutcome>& outcomes) {
  Matrix rho = Matrix::Zero(2, 2);
  for (const auto& o : outcomes) {
    if (o.probability == 0.0) continue;
    rho += o.probability * partial_trace(DensityOperator::from_pure(o.post_state), {1}).matrix();
  }
  return DensityOperator(rho, {2});
}

DensityOperator diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a / (a + b);
  m(1, 1) = b / (a + b);
  return DensityOperator(m, {2});
}

}  // namespace

SignalReport make_report(std::string label, DensityOperator rho0, DensityOperator rho1) {
  const double td = trace_distance(rho0, rho1);
  const double chi = holevo_chi(Ensemble({{0.5, rho0}, {0.5, rho1}}));
  return SignalReport{std::move(label), std::move(rho0), std::move(rho1), td, chi, std::nullopt, {}};
}

SignalReport run_g_signal(double epsilon, int m, const PureState& shared_state) {
  if (shared_state.dims() != Dims{2, 2}) throw ValidationError("G signal: shared state must be 2x2");
  if (!shared_state.normalized()) throw ValidationError("G signal: shared state must be normalized");
  const Matrix g = g_power(epsilon, m);
  const auto rho = DensityOperator::from_pure(shared_state);
  const auto after = apply_channel(rho, OperatorSet::classified({g}), {0});
  SignalReport r = make_report("g-signal", partial_trace(rho, {1}), partial_trace(after.state, {1}));
  r.details = {{"epsilon", epsilon}, {"m", m}, {"norm", after.norm},
               {"amplification", std::pow(1.0 + epsilon, 2 * m)}};
  return r;
}

double single_particle_context_closed_form(double theta, double epsilon, int m) {
  const double c2 = std::pow(std::cos(theta / 2), 2);
  const double s2 = std::pow(std::sin(theta / 2), 2);
  return c2 / (c2 + std::pow(1.0 + epsilon, 2 * m) * s2);
}

ContextProbabilities run_single_particle_context(double theta, double epsilon, int m) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw ValidationError("single-particle context: theta must lie in [0, pi]");
  const PureState psi({std::cos(theta / 2), std::sin(theta / 2)}, {2});
  const double before = gates::measure_with_renorm(psi)[0].probability;
  const double after =
      gates::measure_with_renorm(apply_operator(psi, g_power(epsilon, m), {0}))[0].probability;
  return {before, after};
}

double r_signal_probability(bool diagonal) {
  double p = 0.0;
  for (const auto& [w, s] : r_branches(diagonal)) p += w * ancilla_one_probability(s);
  return p;
}

SignalReport run_r_signal(std::size_t n_trials, std::uint64_t seed) {
  if (n_trials < 1) throw ValidationError("R signal: n_trials must be >= 1");
  SignalReport r = make_report("r-signal", ancilla_state(false), ancilla_state(true));

  TrialStats stats;
  std::vector<unsigned char> computational_ones;
  for (bool diagonal : {false, true}) {
    const auto branches = r_branches(diagonal);
    std::vector<double> alice_weights;
    std::vector<double> one_given_branch;
    for (const auto& [w, s] : branches) {
      alice_weights.push_back(w);
      one_given_branch.push_back(ancilla_one_probability(s));
    }
    std::vector<unsigned char> ones(n_trials, 0);
    parallel_for(n_trials, [&](std::size_t i) {
      Rng rng = trial_rng(seed, diagonal ? 2 : 1, i);
      const std::size_t b = sample_index(alice_weights, rng);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      ones[i] = u(rng) < one_given_branch[b] ? 1 : 0;
    });
    TrialSeries series;
    series.ensemble = diagonal ? "diagonal" : "computational";
    series.trials = n_trials;
    for (unsigned char o : ones) series.ones += o;
    series.frequency = static_cast<double>(series.ones) / static_cast<double>(n_trials);
    series.analytic = r_signal_probability(diagonal);
    series.binomial_sigma =
        std::sqrt(series.analytic * (1.0 - series.analytic) / static_cast<double>(n_trials));
    stats.series.push_back(series);
    if (!diagonal) computational_ones = std::move(ones);
  }

  // Bob calls "diagonal" when all m repetitions read 1.
  double sxx = 0.0, sxy = 0.0, sx = 0.0, sy = 0.0;
  std::size_t fitted = 0;
  for (std::size_t m = 1; m <= 16 && m <= n_trials; ++m) {
    RepetitionPoint pt;
    pt.block_size = m;
    pt.blocks = n_trials / m;
    std::size_t errors = 0;
    for (std::size_t b = 0; b < pt.blocks; ++b) {
      bool all = true;
      for (std::size_t k = 0; k < m; ++k) all = all && computational_ones[b * m + k] != 0;
      errors += all ? 1 : 0;
    }
    pt.error_rate = static_cast<double>(errors) / static_cast<double>(pt.blocks);
    stats.repetition.push_back(pt);
    if (errors > 0) {
      const double x = static_cast<double>(m), y = std::log(pt.error_rate);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++fitted;
    }
  }
  if (fitted >= 2) {
    const double n = static_cast<double>(fitted);
    stats.fitted_exponent = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  r.per_trial_stats = std::move(stats);
  r.details = {{"n_trials", n_trials},
               {"seed", seed},
               {"p_one_computational", r_signal_probability(false)},
               {"p_one_diagonal", r_signal_probability(true)}};
  return r;
}

DensityOperator pnorm_rho1_closed_form(double theta, double p) {
  return diag2(std::pow(std::cos(theta), p), std::pow(std::sin(theta), p));
}

DensityOperator pnorm_rho2_closed_form(double theta, double p) {
  return diag2(std::pow(2.0, 1.0 - p / 2.0) * std::pow(std::cos(theta), p),
               std::pow(std::sin(theta), p));
}

SignalReport run_pnorm_signal(double theta, double p) {
  require_theta_open(theta);
  require_p(p);
  const PureState shared({std::cos(theta), 0.0, 0.0, std::sin(theta)}, {2, 2});

  // Choice 0: a computational-basis measurement on Alice's side is, by
  // construction of the state, a joint measurement in the product basis.
  const auto direct = gates::p_norm_measure(shared, p);

  // Choice 1: ancilla as third qubit, Hadamard on it controlled by Alice = |0>.
  Matrix controlled_h = identity(4);
  controlled_h.block(0, 0, 2, 2) = gates::hadamard();
  const PureState with_ancilla =
      apply_operator(tensor(shared, PureState::basis({2}, 0)), controlled_h, {0, 2});
  const auto via_ancilla = gates::p_norm_measure(with_ancilla, p);

  SignalReport r = make_report("pnorm-signal", bob_mixture(direct), bob_mixture(via_ancilla));
  r.details = {{"theta", theta},
               {"p", p},
               {"closed_form_rho1_deviation",
                operator_norm(r.rho_choice0.matrix() - pnorm_rho1_closed_form(theta, p).matrix())},
               {"closed_form_rho2_deviation",
                operator_norm(r.rho_choice1.matrix() - pnorm_rho2_closed_form(theta, p).matrix())}};
  return r;
}

SignalReport run_constant_signal() {
  const PureState shared({0.0, kInvSqrt2, kInvSqrt2, 0.0}, {2, 2});
  const auto applied = gates::apply_constant_gate(shared, gates::constant_q2(0.0), {0});
  SignalReport r = make_report("constant-signal", bob_state(shared), bob_state(applied.state));
  r.details = {{"detection_weight", applied.detection_weight},
               {"holevo_closed_form", binary_entropy(0.75) - 0.5}};
  return r;
}

SignalReport run_constant_signal_q3() {
  Vector v = Vector::Zero(9);
  v[4] = kInvSqrt2;  // |11>
  v[8] = kInvSqrt2;  // |22>
  const PureState shared(v, {3, 3});
  const auto applied = gates::apply_constant_gate(shared, gates::constant_q3(0.0, 0.0), {0});
  SignalReport r = make_report("constant-signal-q3", bob_state(shared), bob_state(applied.state));
  r.details = {{"detection_weight", applied.detection_weight}};
  return r;
}

SweepResult no_signaling_sweep(std::size_t n_channels, std::uint64_t seed, SweepFamily family,
                               bool insert_noncomplete) {
  if (n_channels < 1) throw ValidationError("no-signaling sweep: n_channels must be >= 1");
  std::vector<double> violation(n_channels, 0.0);
  parallel_for(n_channels, [&](std::size_t i) {
    Rng rng = trial_rng(seed, 0, i);
    const auto rho = DensityOperator::from_pure(random_state({2, 2}, rng));
    const OperatorSet channel = family == SweepFamily::Unitaries
                                    ? OperatorSet({haar_unitary(2, rng)}, Completeness::Complete)
                                    : random_complete_channel(2, 4, rng);
    const auto after = apply_channel(rho, channel, {0}).state;
    violation[i] = trace_distance(partial_trace(rho, {1}), partial_trace(after, {1}));
  });

  SweepResult result;
  result.cases = n_channels;
  for (double v : violation) result.max_violation = std::max(result.max_violation, v);
  if (insert_noncomplete) {
    const PureState shared({0.0, kInvSqrt2, kInvSqrt2, 0.0}, {2, 2});
    const double v = run_g_signal(0.5, 1, shared).trace_dist;
    result.noncomplete_violation = v;
    result.max_violation = std::max(result.max_violation, v);
    ++result.cases;
  }
  return result;
}

}  // namespace qsim::signaling
