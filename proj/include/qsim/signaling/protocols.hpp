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
#include <vector>

#include <json.hpp>

#include "qsim/core/state.hpp"

// Alice/Bob signaling experiments. Every protocol compares the state Bob ends
// up with under Alice's two choices and reports how distinguishable they are.

namespace qsim::signaling {

/// Empirical tally of one sampled ensemble.
struct TrialSeries {
  std::string ensemble;
  std::size_t trials = 0;
  std::size_t ones = 0;
  double frequency = 0.0;
  double analytic = 0.0;
  double binomial_sigma = 0.0;  ///< sqrt(p(1-p)/n) at the analytic p
};

/// Fraction of m-trial blocks from the computational ensemble that read all
/// ones, i.e. that Bob would misread as the diagonal ensemble.
struct RepetitionPoint {
  std::size_t block_size = 0;
  std::size_t blocks = 0;
  double error_rate = 0.0;
};

struct TrialStats {
  std::vector<TrialSeries> series;
  std::vector<RepetitionPoint> repetition;
  /// c in error ~ exp(-c m), least squares over points with nonzero error.
  double fitted_exponent = 0.0;
};

struct SignalReport {
  std::string label;
  DensityOperator rho_choice0;
  DensityOperator rho_choice1;
  double trace_dist = 0.0;
  /// Holevo quantity of the equiprobable ensemble {rho_choice0, rho_choice1}.
  double holevo_bits = 0.0;
  std::optional<TrialStats> per_trial_stats;
  /// Protocol-specific scalars (closed forms, norms, probabilities).
  nlohmann::json details = nlohmann::json::object();
};

/// Fills trace_dist and holevo_bits from the two states.
SignalReport make_report(std::string label, DensityOperator rho0, DensityOperator rho1);

/// Alice applies identity (choice 0) or G(eps)^m (choice 1) to qubit 0 of the
/// shared two-qubit state; Bob's reduced state is renormalized. m = 0 is the
/// identity.
SignalReport run_g_signal(double epsilon, int m, const PureState& shared_state);

struct ContextProbabilities {
  double p_before;
  double p_after;
};

/// Probability of |0> for cos(t/2)|0> + sin(t/2)|1> before and after G^m,
/// with the measurement renormalizing.
ContextProbabilities run_single_particle_context(double theta, double epsilon, int m);

/// Closed form cos^2(t/2) / (cos^2(t/2) + (1+eps)^{2m} sin^2(t/2)).
double single_particle_context_closed_form(double theta, double epsilon, int m);

/// Alice measures her half of (|00> - |11>)/sqrt2 in the computational
/// (choice 0) or diagonal (choice 1) basis. Bob copies his qubit onto an
/// ancilla with a CNOT, applies the nonlinear OR, and measures the ancilla.
/// The reported states are the ancilla's; n_trials are sampled per ensemble.
SignalReport run_r_signal(std::size_t n_trials, std::uint64_t seed);

/// Analytic P(ancilla = 1) for the computational (false) or diagonal (true)
/// ensemble, computed from the exact branch states.
double r_signal_probability(bool diagonal);

/// Shared cos(t)|00> + sin(t)|11>. Choice 0: Alice measures her qubit with
/// the p-norm rule. Choice 1: she first applies a Hadamard to a fresh
/// ancilla controlled on her qubit being |0>, then measures both.
SignalReport run_pnorm_signal(double theta, double p);

/// Closed forms for Bob's state, diag(P0, P1).
DensityOperator pnorm_rho1_closed_form(double theta, double p);
DensityOperator pnorm_rho2_closed_form(double theta, double p);

/// Alice applies Q or nothing to her half of (|01> + |10>)/sqrt2.
SignalReport run_constant_signal();

/// Qutrit variant: Q' or nothing on Alice's half of (|11> + |22>)/sqrt2.
SignalReport run_constant_signal_q3();

enum class SweepFamily { CompleteChannels, Unitaries };

struct SweepResult {
  std::size_t cases = 0;
  double max_violation = 0.0;
  /// Bob-side change caused by G(0.5, 1) on (|01> + |10>)/sqrt2, when inserted.
  std::optional<double> noncomplete_violation;
};

/// Random channels on Alice's qubit of Haar-random two-qubit states; reports
/// the largest change of Bob's reduced state. Complete channels use four
/// Kraus elements (dilation twice the system dimension).
SweepResult no_signaling_sweep(std::size_t n_channels, std::uint64_t seed,
                               SweepFamily family = SweepFamily::CompleteChannels,
                               bool insert_noncomplete = false);

nlohmann::json to_json(const SignalReport& report);
nlohmann::json to_json(const SweepResult& result);
/// Trial series as CSV rows with an "ensemble,trials,ones,frequency,analytic,sigma" header.
std::string trial_stats_csv(const TrialStats& stats);

}  // namespace qsim::signaling
