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

// Acceptance suite: one test per criterion, one PASS/FAIL line per test.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qsim/cli/experiments.hpp"
#include "qsim/complexity/algorithms.hpp"
#include "qsim/complexity/interferometry.hpp"
#include "qsim/core/channel.hpp"
#include "qsim/core/metrics.hpp"
#include "qsim/core/random.hpp"
#include "qsim/gates/nonstandard.hpp"
#include "qsim/optics/ensembles.hpp"
#include "qsim/optics/innsbruck.hpp"
#include "qsim/signaling/protocols.hpp"

using namespace qsim;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- oracles

bool scan(const complexity::BooleanOracle& o) {
  for (std::size_t x = 0; x < o.size(); ++x)
    if (o(x)) return true;
  return false;
}

std::size_t popcount(const complexity::BooleanOracle& o) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < o.size(); ++x) c += o(x) ? 1 : 0;
  return c;
}

double h2(double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); }

using Real6 = std::array<std::array<double, 6>, 6>;

// Cyclic Jacobi eigenvalues of a real symmetric 6x6 matrix.
std::array<double, 6> jacobi_eigenvalues(Real6 a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-32) break;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 6; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 6; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 6> ev{};
  for (int i = 0; i < 6; ++i) ev[i] = a[i][i];
  return ev;
}

double ensemble_trace_distance_oracle() {
  Real6 d{};
  auto add = [&d](std::initializer_list<int> modes, double w) {
    const double amp2 = 1.0 / static_cast<double>(modes.size());
    for (int i : modes)
      for (int j : modes) d[i - 1][j - 1] += w * amp2;
  };
  add({2, 5}, 1.0 / 3.0);
  add({1, 4}, 1.0 / 3.0);
  add({3, 6}, 1.0 / 3.0);
  add({1, 2, 3}, -0.5);
  add({4, 5, 6}, -0.5);
  double s = 0.0;
  for (double e : jacobi_eigenvalues(d)) s += std::abs(e);
  return s / 2.0;
}

std::string read(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_binary(const std::string& args) {
  const int status = std::system((std::string(QSIM_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Acceptance, NoSignalingSuite) {
  const auto r = signaling::no_signaling_sweep(1000, 20260101, signaling::SweepFamily::CompleteChannels);
  EXPECT_EQ(r.cases, 1000u);
  EXPECT_LT(r.max_violation, 1e-10);
  // The check is not vacuous: a non-complete operation is caught.
  const auto bad = signaling::no_signaling_sweep(10, 1, signaling::SweepFamily::CompleteChannels, true);
  EXPECT_GT(*bad.noncomplete_violation, 0.1);
}

TEST(Acceptance, GGateSignal) {
  const double a = 1.0 / std::numbers::sqrt2;
  const PureState phi({a, 0.0, 0.0, a}, {2, 2});
  const PureState psi({0.0, a, a, 0.0}, {2, 2});
  for (double eps : {0.01, 0.1, 1.0})
    for (int m : {1, 5, 20}) {
      const double w = std::pow(1.0 + eps, 2 * m);
      const auto r = signaling::run_g_signal(eps, m, phi);
      EXPECT_NEAR(r.rho_choice1.matrix()(0, 0).real(), 1.0 / (1.0 + w), 1e-12) << eps << " " << m;
      EXPECT_NEAR(r.rho_choice1.matrix()(1, 1).real(), w / (1.0 + w), 1e-12);
      EXPECT_NEAR(std::abs(r.rho_choice1.matrix()(0, 1)), 0.0, 1e-12);
      // Mirrored form on (|01> + |10>)/sqrt2.
      const auto s = signaling::run_g_signal(eps, m, psi);
      EXPECT_NEAR(s.rho_choice1.matrix()(0, 0).real(), w / (1.0 + w), 1e-12);
      for (double theta : {0.3, kPi / 2.0, 2.0}) {
        const double c2 = std::pow(std::cos(theta / 2.0), 2), s2 = std::pow(std::sin(theta / 2.0), 2);
        const auto ctx = signaling::run_single_particle_context(theta, eps, m);
        EXPECT_NEAR(ctx.p_before, c2, 1e-12);
        EXPECT_NEAR(ctx.p_after, c2 / (c2 + w * s2), 1e-12);
      }
    }
}

TEST(Acceptance, RGateSignal) {
  EXPECT_EQ(signaling::r_signal_probability(true), 1.0);
  EXPECT_EQ(signaling::r_signal_probability(false), 0.5);
  const auto r = signaling::run_r_signal(10000, 424242);
  ASSERT_TRUE(r.per_trial_stats.has_value());
  ASSERT_EQ(r.per_trial_stats->series.size(), 2u);
  for (const auto& s : r.per_trial_stats->series) {
    EXPECT_EQ(s.trials, 10000u);
    const double p = s.analytic;
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(s.trials));
    EXPECT_LE(std::abs(s.frequency - p), 3.0 * sigma) << s.ensemble;
  }
}

TEST(Acceptance, PNormSignal) {
  const double theta = kPi / 4.0;
  for (double p : {0.0, 1.0, 2.0, 3.0, 4.0, 6.0}) {
    const auto r = signaling::run_pnorm_signal(theta, p);
    if (p == 2.0) {
      EXPECT_LT(r.trace_dist, 1e-12);
    } else {
      EXPECT_GT(r.trace_dist, 1e-3) << p;
    }
    const double a = std::pow(2.0, 1.0 - p / 2.0) * std::pow(std::cos(theta), p);
    const double b = std::pow(std::sin(theta), p);
    EXPECT_NEAR(r.rho_choice1.matrix()(0, 0).real(), a / (a + b), 1e-12) << p;
    EXPECT_NEAR(r.rho_choice1.matrix()(1, 1).real(), b / (a + b), 1e-12) << p;
  }
}

TEST(Acceptance, ConstantGateSignal) {
  const auto r = signaling::run_constant_signal();
  EXPECT_NEAR(r.holevo_bits, h2(0.75) - 0.5, 1e-9);
  EXPECT_NEAR(r.trace_dist, 0.5, 1e-12);
}

TEST(Acceptance, SatGadgets) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t tables = std::size_t{1} << (std::size_t{1} << n);
    for (std::size_t bits = 0; bits < tables; ++bits) {
      std::vector<bool> t(std::size_t{1} << n);
      for (std::size_t x = 0; x < t.size(); ++x) t[x] = ((bits >> x) & 1) != 0;
      const complexity::BooleanOracle o(n, t);
      const bool truth = scan(o);
      EXPECT_EQ(complexity::sat_via_g(o, 1.0, 32, bits).decision, truth);
      EXPECT_EQ(complexity::nondet_via_r(o, complexity::NondetMode::OrDecision).decision, truth);
      EXPECT_EQ(complexity::sat_via_postselection(o, bits).decision, truth);
      EXPECT_EQ(complexity::grover_baseline(o, 4, bits).decision, truth);
      EXPECT_EQ(complexity::nondet_via_r(o, complexity::NondetMode::Count).count.value(), popcount(o));
    }
  }
  for (std::size_t n : {6u, 8u, 10u}) {
    for (std::size_t i = 0; i < 200; ++i) {
      Rng rng = trial_rng(31337, n, i);
      const auto o = complexity::random_oracle(n, rng);
      const bool truth = scan(o);
      EXPECT_EQ(complexity::sat_via_g(o, 1.0, 32, i).decision, truth) << n << " " << i;
      EXPECT_EQ(complexity::nondet_via_r(o, complexity::NondetMode::OrDecision).decision, truth);
      EXPECT_EQ(complexity::sat_via_postselection(o, i).decision, truth);
      EXPECT_EQ(complexity::grover_baseline(o, 4, i).decision, truth);
      if (n == 6)
        EXPECT_EQ(complexity::nondet_via_r(o, complexity::NondetMode::Count).count.value(), popcount(o));
    }
  }
  for (std::size_t n : {2u, 4u, 6u, 8u, 10u}) {
    const auto r = complexity::sat_via_g(complexity::BooleanOracle::from_solutions(n, {1}), 1.0);
    EXPECT_EQ(r.details["m"].get<int>(), static_cast<int>(std::ceil(n / 2.0)));
    EXPECT_NEAR(r.success_probability, 1.0 / (2.0 - std::ldexp(1.0, -static_cast<int>(n))), 1e-12);
  }
}

TEST(Acceptance, Q2Simulation) {
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng = trial_rng(777, 0, i);
    const std::size_t n = 1 + i % 5;
    const PureState psi = random_state(Dims(n + 1, 2), rng);
    const double phi = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
    const auto sim = complexity::simulate_q2(psi, phi, i);
    const PureState direct = apply_operator(psi, gates::constant_q2(phi), {n});
    EXPECT_NEAR(sim.success_prob, direct.norm_squared() / 2.0, 1e-12);
    EXPECT_GE(fidelity(sim.out_state, direct), 1.0 - 1e-12);
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t dim = std::size_t{1} << (n + 1);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v[0] = 1.0 / std::numbers::sqrt2;
    v[static_cast<Eigen::Index>(dim - 1)] = 1.0 / std::numbers::sqrt2;
    EXPECT_NEAR(complexity::simulate_q2(PureState(v, Dims(n + 1, 2)), 0.9).success_prob, 0.5, 1e-15);
  }
}

TEST(Acceptance, OpticsPatterns) {
  const optics::OpticsConfig cfg;
  EXPECT_NEAR(optics::coincidence_pattern(cfg, optics::AlicePoint::F, true).visibility, 1.0, 1e-9);
  EXPECT_NEAR(optics::singles_pattern(cfg, optics::AlicePlane::Focal, true).visibility, 1.0, 1e-9);
  EXPECT_LT(optics::singles_pattern(cfg, optics::AlicePlane::Imaging, true).visibility, 1e-9);

  optics::OpticsConfig sc = cfg;
  sc.grid_periods = 4;
  for (int i = 0; i < 50; ++i) {
    sc.spreading_angle = (kPi / 2.0) * i / 49.0;
    const auto s = optics::spreading_pattern(sc);
    EXPECT_NEAR(s.coincident_f.visibility, std::abs(std::cos(2.0 * sc.spreading_angle)), 1e-10);
    const auto [lo, hi] = std::minmax_element(s.singles.intensity.begin(), s.singles.intensity.end());
    EXPECT_LT(*hi - *lo, 1e-10);
  }
  sc.spreading_angle = kPi / 4.0;
  EXPECT_LT(optics::spreading_pattern(sc).coincident_f.visibility, 1e-10);

  const auto ens = optics::remote_ensembles(true);
  EXPECT_GT(ens.trace_dist, 0.1);
  EXPECT_NEAR(ens.trace_dist, ensemble_trace_distance_oracle(), 1e-12);

  EXPECT_LT(optics::bob_povm_integral(cfg).defect, 1e-10);
  EXPECT_LT(optics::bob_povm_integral_over_phase(0.0, 2.0 * kPi, 129).defect, 1e-10);
}

TEST(Acceptance, Complementarity) {
  for (const auto& p : optics::complementarity_curve(optics::complementarity_grid(100))) {
    EXPECT_LT(std::abs(p.coherence - std::cos(p.theta)), 1e-12);
    EXPECT_LT(std::abs(p.entanglement - std::sin(p.theta)), 1e-12);
    EXPECT_LT(std::abs(p.coherence * p.coherence + p.entanglement * p.entanglement - 1.0), 1e-12);
  }
}

TEST(Acceptance, InterferometricSearch) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto o = complexity::BooleanOracle::from_solutions(n, {(std::size_t{1} << n) - 1});
    const auto r = complexity::interferometric_search(o, {65, kPi});
    const double q = std::ldexp(1.0, -static_cast<int>(n));
    EXPECT_NEAR(r.detect_prob, 4.0 * q, 1e-15) << n;
    // |a + e^{i theta} b|^2 with <a|b> = 1 - 2^{1-n}: dark at 0, bright at pi.
    EXPECT_NEAR(r.dark, 4.0 * q, 1e-10);
    EXPECT_NEAR(r.bright, 4.0 - 4.0 * q, 1e-10);
    for (const auto& f : r.fringe)
      EXPECT_NEAR(f.intensity, 2.0 - 2.0 * (1.0 - 2.0 * q) * std::cos(f.theta), 1e-10);
  }
}

TEST(Acceptance, Determinism) {
  const fs::path root = fs::temp_directory_path() / "qsim_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  for (const auto& e : cli::registry()) {
    const fs::path spec = root / (e.name + ".toml");
    std::ofstream(spec) << "name = \"" << e.name << "\"\nseed = 2026\n";
    ASSERT_EQ(run_binary("run " + spec.string() + " --out " + (root / (e.name + "_a")).string()), 0) << e.name;
    ASSERT_EQ(run_binary("run " + spec.string() + " --out " + (root / (e.name + "_b")).string()), 0) << e.name;
    const std::string a = read(root / (e.name + "_a") / "report.json");
    const std::string b = read(root / (e.name + "_b") / "report.json");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b) << e.name;
  }
  fs::remove_all(root);
}

namespace {

struct Criterion {
  const char* test;
  const char* line;
};

const Criterion kCriteria[] = {
    {"NoSignalingSuite", "No-signaling: 1000 random complete channels, max Bob change < 1e-10"},
    {"GGateSignal", "G-gate signal: rho_B closed form on the (eps, m) grid and single-particle context to 1e-12"},
    {"RGateSignal", "R-gate signal: P(1) = 1 vs 1/2 exactly, 10^4 trials within 3 sigma"},
    {"PNormSignal", "p-norm signal: zero at p = 2, > 1e-3 otherwise, rho(2) closed form to 1e-12"},
    {"ConstantGateSignal", "Constant-gate signal: chi = H(3/4) - 1/2 to 1e-9, trace distance 1/2"},
    {"SatGadgets", "SAT gadgets: decisions match truth-table scan, flag probability 1/(2-2^-n), exact count"},
    {"Q2Simulation", "Q2 simulation: success N/2 to 1e-12, fidelity >= 1 - 1e-12, orthogonal case 1/2"},
    {"OpticsPatterns", "Optics: R_F/R_I visibilities, spreading |cos 2theta|, flat singles, rho_P vs rho_Q oracle, POVM"},
    {"Complementarity", "Complementarity: C = cos, E = sin, C^2 + E^2 = 1 to 1e-12 on 100 points"},
    {"InterferometricSearch", "Interferometric search: detect 4 * 2^-n for n = 2..12, dark/bright fringes to 1e-10"},
    {"Determinism", "Determinism: byte-identical report.json across two runs for every experiment"},
};

class CriterionPrinter : public ::testing::EmptyTestEventListener {
 public:
  void OnTestPartResult(const ::testing::TestPartResult& r) override {
    if (r.failed() && failures_.size() < 4000) {
      std::ostringstream s;
      s << "      " << (r.file_name() ? r.file_name() : "?") << ":" << r.line_number() << ": "
        << r.summary() << "\n";
      failures_ += s.str();
    }
  }
  void OnTestEnd(const ::testing::TestInfo& info) override {
    const char* line = info.name();
    for (const auto& c : kCriteria)
      if (std::string(c.test) == info.name()) line = c.line;
    const bool ok = info.result()->Passed();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << line << "  (" << info.result()->elapsed_time()
              << " ms)\n";
    if (!ok) std::cout << failures_;
    failures_.clear();
    passed_ += ok ? 1 : 0;
    ++total_;
  }
  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::cout << "acceptance: " << passed_ << "/" << total_ << " criteria passed\n";
  }

 private:
  std::string failures_;
  int passed_ = 0;
  int total_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  auto& listeners = ::testing::UnitTest::GetInstance()->listeners();
  delete listeners.Release(listeners.default_result_printer());
  listeners.Append(new CriterionPrinter);
  return RUN_ALL_TESTS();
}
