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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qsim/complexity/algorithms.hpp"
#include "qsim/core/metrics.hpp"
#include "qsim/core/random.hpp"
#include "qsim/gates/nonstandard.hpp"
#include "test_util.hpp"

using namespace qsim;
using namespace qsim::complexity;
using qsim::testing::kInvSqrt2;
using qsim::testing::states_near;
using qsim::testing::vec;

namespace {

// Brute-force scan, the reference for every decision procedure.
bool scan(const BooleanOracle& o) {
  for (std::size_t x = 0; x < o.size(); ++x)
    if (o(x)) return true;
  return false;
}

std::size_t popcount(const BooleanOracle& o) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < o.size(); ++x) c += o(x) ? 1 : 0;
  return c;
}

BooleanOracle table_oracle(std::size_t n, std::size_t bits) {
  std::vector<bool> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = ((bits >> x) & 1) != 0;
  return BooleanOracle(n, t);
}

}  // namespace

TEST(SatState, Examples) {
  EXPECT_TRUE(states_near(build_sat_state(BooleanOracle::from_bitstring("00")),
                          vec({kInvSqrt2, 0.0, kInvSqrt2, 0.0}), 1e-15));
  EXPECT_TRUE(states_near(build_sat_state(BooleanOracle::from_solutions(2, {3})),
                          vec({0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.0, 0.5}), 1e-15));
  const auto o = BooleanOracle::from_solutions(5, {1, 7, 30});
  const PureState s = build_sat_state(o);
  double p1 = 0.0;
  for (std::size_t i = 1; i < s.dim(); i += 2) p1 += std::norm(s[i]);
  EXPECT_NEAR(p1, 3.0 / 32.0, 1e-15);
}

TEST(SatViaG, ScheduleAndSolvableProbability) {
  EXPECT_EQ(g_schedule(8, 1.0), 4);
  EXPECT_EQ(g_schedule(7, 1.0), 4);
  EXPECT_EQ(g_schedule(10, 0.1), static_cast<int>(std::ceil(10.0 / (2.0 * std::log2(1.1)))));
  for (std::size_t n : {2u, 4u, 6u, 8u, 10u}) {
    const auto r = sat_via_g(BooleanOracle::from_solutions(n, {1}), 1.0);
    EXPECT_NEAR(r.success_probability, 1.0 / (2.0 - std::ldexp(1.0, -static_cast<int>(n))), 1e-12);
    EXPECT_NEAR(r.details["unnormalized_flag_mass"].get<double>(), 1.0, 1e-12);
    EXPECT_TRUE(r.decision);
  }
  const auto unsat = sat_via_g(BooleanOracle::from_solutions(8, {}), 1.0);
  EXPECT_EQ(unsat.success_probability, 0.0);
  EXPECT_FALSE(unsat.decision);
}

TEST(SatViaG, ClosedFormForOtherEpsilon) {
  const auto o = BooleanOracle::from_solutions(9, {100});
  const auto r = sat_via_g(o, 0.3);
  const int m = r.details["m"].get<int>();
  EXPECT_NEAR(r.success_probability, g_flag_probability_closed_form(9, 1, 0.3, m), 1e-12);
  EXPECT_GE(std::pow(1.3, 2 * m) / 512.0, 1.0);
}

TEST(Decisions, ExhaustiveSmallOracles) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t tables = std::size_t{1} << (std::size_t{1} << n);
    for (std::size_t bits = 0; bits < tables; ++bits) {
      const auto o = table_oracle(n, bits);
      const bool truth = scan(o);
      EXPECT_EQ(sat_via_g(o, 1.0, 32, bits).decision, truth) << n << " " << bits;
      EXPECT_EQ(nondet_via_r(o, NondetMode::OrDecision).decision, truth);
      EXPECT_EQ(sat_via_postselection(o, bits).decision, truth);
      EXPECT_EQ(grover_baseline(o, 4, bits).decision, truth);
      EXPECT_EQ(nondet_via_r(o, NondetMode::Count).count.value(), popcount(o));
    }
  }
}

TEST(Decisions, RandomOraclesAgreeWithScan) {
  for (std::size_t n : {5u, 7u}) {
    for (std::size_t i = 0; i < 40; ++i) {
      Rng rng = trial_rng(99, n, i);
      const auto o = random_oracle(n, rng);
      const bool truth = scan(o);
      EXPECT_EQ(sat_via_g(o, 1.0, 32, i).decision, truth);
      EXPECT_EQ(nondet_via_r(o, NondetMode::OrDecision).decision, truth);
      EXPECT_EQ(sat_via_postselection(o, i).decision, truth);
      EXPECT_EQ(grover_baseline(o, 4, i).decision, truth);
    }
  }
}

TEST(NondetViaR, FlagTermsDouble) {
  const auto o = BooleanOracle::from_solutions(3, {5});
  EXPECT_EQ(nondet_flag_term_counts(o), (std::vector<std::size_t>{1, 2, 4, 8}));
  const auto r = nondet_via_r(o, NondetMode::OrDecision);
  EXPECT_EQ(r.success_probability, 1.0);
  EXPECT_TRUE(r.decision);
}

TEST(NondetViaR, CountMode) {
  std::vector<std::size_t> sols;
  for (std::size_t x = 0; x < 64 && sols.size() < 13; x += 5) sols.push_back(x);
  const auto o = BooleanOracle::from_solutions(6, sols);
  const auto r = nondet_via_r(o, NondetMode::Count);
  EXPECT_EQ(r.count.value(), 13u);
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  EXPECT_THROW(nondet_via_r(BooleanOracle::from_solutions(7, {1}), NondetMode::Count), ValidationError);
}

TEST(NondetViaR, QbfAgreesWithReference) {
  EXPECT_TRUE(nondet_via_r(BooleanOracle::from_bitstring("0110"), NondetMode::Qbf, "AE").decision);
  EXPECT_FALSE(nondet_via_r(BooleanOracle::from_bitstring("0110"), NondetMode::Qbf, "EA").decision);
  const std::vector<std::string> prefixes = {"AAA", "AAE", "AEA", "AEE", "EAA", "EAE", "EEA", "EEE"};
  for (std::size_t bits = 0; bits < 256; ++bits) {
    const auto o = table_oracle(3, bits);
    for (const auto& p : prefixes)
      EXPECT_EQ(nondet_via_r(o, NondetMode::Qbf, p).decision, evaluate_qbf(o, p)) << bits << p;
  }
  EXPECT_THROW(nondet_via_r(BooleanOracle::from_bitstring("0110"), NondetMode::Qbf, "A"),
               ValidationError);
}

TEST(PostSelection, Examples) {
  const auto r = sat_via_postselection(BooleanOracle::from_solutions(4, {}));
  EXPECT_FALSE(r.decision);
  EXPECT_THROW(postselected_state(BooleanOracle::from_solutions(4, {})), NumericError);

  const PureState post = postselected_state(BooleanOracle::from_solutions(4, {3, 9}));
  Vector expected = Vector::Zero(32);
  expected[2 * 3 + 1] = kInvSqrt2;
  expected[2 * 9 + 1] = kInvSqrt2;
  EXPECT_TRUE(states_near(post, expected, 1e-15));

  const auto sat = sat_via_postselection(BooleanOracle::from_solutions(4, {3, 9}), 1);
  EXPECT_TRUE(sat.decision);
  EXPECT_TRUE(*sat.assignment == 3 || *sat.assignment == 9);
  EXPECT_EQ(sat.resources.oracle_calls, 1u);
  EXPECT_EQ(sat.resources.gate_applications, 1u);
}

TEST(SimulateQ2, ProbabilityIsHalfTheNorm) {
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng = trial_rng(17, 0, i);
    const std::size_t n = 1 + i % 4;
    const PureState psi = random_state(Dims(n + 1, 2), rng);
    const double phi = std::uniform_real_distribution<double>(-4.0, 4.0)(rng);
    const auto sim = simulate_q2(psi, phi, i);

    // Independent: N = ||Q2(phi)|psi>||^2 by direct matrix application.
    const PureState direct = apply_operator(psi, gates::constant_q2(phi), {n});
    EXPECT_NEAR(sim.success_prob, direct.norm_squared() / 2.0, 1e-12);
    EXPECT_NEAR(sim.norm_factor, q2_norm_factor(psi, phi), 1e-12);
    EXPECT_GE(fidelity(sim.out_state, direct), 1.0 - 1e-12);
  }
}

TEST(SimulateQ2, OrthogonalComponentsGiveHalf) {
  for (std::size_t n = 2; n <= 10; ++n) {
    // |a> = |0...0>/sqrt2 and |b> = |1...1>/sqrt2 are orthogonal.
    const std::size_t dim = std::size_t{1} << (n + 1);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v[0] = kInvSqrt2;
    v[static_cast<Eigen::Index>(dim - 1)] = kInvSqrt2;
    const auto sim = simulate_q2(PureState(v, Dims(n + 1, 2)), 0.7);
    EXPECT_NEAR(sim.success_prob, 0.5, 1e-15);
  }
}

TEST(SimulateQ2, Annihilation) {
  EXPECT_THROW(simulate_q2(PureState({kInvSqrt2, kInvSqrt2}, {2}), std::numbers::pi), NumericError);
  EXPECT_THROW(simulate_q2(PureState::basis({3}, 0), 0.0), ValidationError);
}

TEST(Grover, Examples) {
  const auto o = BooleanOracle::from_solutions(4, {11});
  EXPECT_GE(grover_success_probability(o, 3), 0.96);
  EXPECT_NEAR(grover_success_probability(o, 3), grover_success_closed_form(4, 1, 3), 1e-12);
  EXPECT_NEAR(grover_success_probability(o, 0), 1.0 / 16.0, 1e-15);
  EXPECT_EQ(grover_success_probability(BooleanOracle::from_solutions(4, {}), 3), 0.0);
  const auto r = grover_baseline(o);
  EXPECT_EQ(r.details["iterations"].get<std::size_t>(), 3u);
  EXPECT_NEAR(r.success_probability, grover_success_closed_form(4, 1, 3), 1e-12);
  EXPECT_THROW(grover_baseline(BooleanOracle::from_solutions(13, {1})), ValidationError);
}
