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

#include "qsim/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "qsim/cli/output.hpp"
#include "qsim/complexity/algorithms.hpp"
#include "qsim/complexity/interferometry.hpp"
#include "qsim/core/format.hpp"
#include "qsim/core/metrics.hpp"
#include "qsim/core/random.hpp"
#include "qsim/core/serialize.hpp"
#include "qsim/optics/ensembles.hpp"
#include "qsim/optics/innsbruck.hpp"
#include "qsim/signaling/protocols.hpp"

namespace qsim::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- Params

bool type_matches(const json& def, const json& v) {
  if (def.is_null()) return true;
  if (def.is_boolean()) return v.is_boolean();
  if (def.is_number_integer()) return v.is_number_integer();
  if (def.is_number()) return v.is_number();
  if (def.is_string()) return v.is_string();
  if (def.is_array()) return v.is_array();
  if (def.is_object()) return v.is_object() || v.is_string();
  return false;
}

const char* type_name(const json& def) {
  if (def.is_boolean()) return "a boolean";
  if (def.is_number_integer()) return "an integer";
  if (def.is_number()) return "a number";
  if (def.is_string()) return "a string";
  if (def.is_array()) return "an array";
  if (def.is_object()) return "an object or string";
  return "a value";
}

}  // namespace

Params::Params(const json& defaults, const json& given) : values_(defaults) {
  if (given.is_null()) return;
  if (!given.is_object()) throw ValidationError("params must be a table");
  for (const auto& [key, v] : given.items()) {
    if (!defaults.contains(key)) throw ValidationError("unknown parameter '" + key + "'");
    if (!type_matches(defaults[key], v))
      throw ValidationError("parameter '" + key + "' must be " + type_name(defaults[key]));
    values_[key] = v;
  }
}

const json& Params::raw(const std::string& key) const {
  if (!values_.contains(key)) throw ValidationError("missing parameter '" + key + "'");
  return values_[key];
}

double Params::number(const std::string& key) const {
  const json& v = raw(key);
  if (!v.is_number()) throw ValidationError("parameter '" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError("parameter '" + key + "' must be finite");
  return d;
}

long long Params::integer(const std::string& key) const {
  const json& v = raw(key);
  if (!v.is_number_integer()) throw ValidationError("parameter '" + key + "' must be an integer");
  return v.get<long long>();
}

std::size_t Params::count(const std::string& key, std::size_t lo, std::size_t hi) const {
  const long long v = integer(key);
  if (v < 0 || static_cast<std::size_t>(v) < lo || static_cast<std::size_t>(v) > hi)
    throw ValidationError("parameter '" + key + "' must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  return static_cast<std::size_t>(v);
}

bool Params::boolean(const std::string& key) const {
  const json& v = raw(key);
  if (!v.is_boolean()) throw ValidationError("parameter '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string Params::string(const std::string& key) const {
  const json& v = raw(key);
  if (!v.is_string()) throw ValidationError("parameter '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> Params::numbers(const std::string& key) const {
  const json& v = raw(key);
  if (!v.is_array()) throw ValidationError("parameter '" + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number() || !std::isfinite(x.get<double>()))
      throw ValidationError("parameter '" + key + "' must hold finite numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

json Params::subset(const std::vector<std::string>& keys) const {
  json out = json::object();
  for (const auto& k : keys) out[k] = raw(k);
  return out;
}

namespace {

std::string fmt(double v) { return format_double(v); }

// ---------------------------------------------------------------- helpers

const std::vector<std::string> kOpticsKeys = {
    "wavelength",   "slit_separation", "screen_distance", "filter_aperture",
    "filter_focal_length", "imaging_focal_length", "spreading_angle", "pump_strength",
    "omega14",      "omega36",         "grid_periods",    "points_per_period",
    "z_grid"};

json optics_defaults(json extra = json::object()) {
  json d = optics::to_json(optics::OpticsConfig{});
  d["z_grid"] = json::array();
  for (const auto& [k, v] : extra.items()) d[k] = v;
  return d;
}

optics::OpticsConfig optics_config(const Params& p) {
  return optics::optics_config_from_json(p.subset(kOpticsKeys));
}

json pattern_summary(const std::vector<optics::Pattern>& patterns, const optics::OpticsConfig& cfg) {
  json out = json::object();
  for (const auto& pat : patterns) out[pat.label] = optics::to_json(pat, cfg);
  return out;
}

complexity::BooleanOracle oracle_param(const Params& p, std::uint64_t seed) {
  const json& j = p.raw("oracle");
  if (j.is_object() && j.contains("random_n")) {
    if (j.size() != 1 || !j["random_n"].is_number_integer())
      throw ValidationError("oracle: {random_n = N} takes a single integer");
    const long long n = j["random_n"].get<long long>();
    if (n < 1 || n > 14) throw ValidationError("oracle: random_n must lie in [1, 14]");
    Rng rng = trial_rng(seed, 0, 0);
    return complexity::random_oracle(static_cast<std::size_t>(n), rng);
  }
  return complexity::oracle_from_json(j);
}

json oracle_summary(const complexity::BooleanOracle& o) {
  json j = complexity::to_json(o);
  j["count"] = o.count();
  return j;
}

PureState bell_state(const std::string& which) {
  const double a = 1.0 / std::numbers::sqrt2;
  if (which == "phi+") return PureState({a, 0.0, 0.0, a}, {2, 2});
  if (which == "psi+") return PureState({0.0, a, a, 0.0}, {2, 2});
  throw ValidationError("state must be \"phi+\" or \"psi+\"");
}

void add_signal_summary(ExperimentOutput& out, const signaling::SignalReport& r) {
  out.summary.push_back({"trace_dist", fmt(r.trace_dist)});
  out.summary.push_back({"holevo_bits", fmt(r.holevo_bits)});
}

// ---------------------------------------------------------------- signaling

ExperimentOutput run_g_signal(const Params& p, std::uint64_t) {
  const double eps = p.number("epsilon");
  const int m = static_cast<int>(p.count("m", 0, 1000));
  const std::string state = p.string("state");
  const auto report = signaling::run_g_signal(eps, m, bell_state(state));

  // The bias lands on Bob's |1> for phi+ and on |0> for psi+.
  const double w = std::pow(1.0 + eps, 2 * m);
  const double big = w / (1.0 + w), small = 1.0 / (1.0 + w);
  const double expected0 = state == "phi+" ? small : big;
  const double dev = std::max(std::abs(report.rho_choice1.matrix()(0, 0).real() - expected0),
                              std::abs(report.rho_choice1.matrix()(1, 1).real() - (1.0 - expected0)));

  const double theta = p.number("theta");
  const auto ctx = signaling::run_single_particle_context(theta, eps, m);
  const double ctx_closed = signaling::single_particle_context_closed_form(theta, eps, m);

  ExperimentOutput out;
  out.results["signal"] = signaling::to_json(report);
  out.results["closed_form_bob_diag"] = {expected0, 1.0 - expected0};
  out.results["closed_form_deviation"] = dev;
  out.results["single_particle_context"] = {
      {"p_before", ctx.p_before}, {"p_after", ctx.p_after}, {"closed_form", ctx_closed},
      {"deviation", std::abs(ctx.p_after - ctx_closed)}};
  add_signal_summary(out, report);
  out.summary.push_back({"closed_form_deviation", fmt(dev)});
  return out;
}

ExperimentOutput run_r_signal(const Params& p, std::uint64_t seed) {
  const auto report = signaling::run_r_signal(p.count("trials", 1, 10'000'000), seed);
  ExperimentOutput out;
  out.results["signal"] = signaling::to_json(report);
  out.results["analytic_p1_diagonal"] = signaling::r_signal_probability(true);
  out.results["analytic_p1_computational"] = signaling::r_signal_probability(false);
  out.files.push_back({"trial_stats.csv", signaling::trial_stats_csv(*report.per_trial_stats)});
  add_signal_summary(out, report);
  for (const auto& s : report.per_trial_stats->series)
    out.summary.push_back({"frequency_" + s.ensemble, fmt(s.frequency)});
  return out;
}

ExperimentOutput run_pnorm_signal(const Params& p, std::uint64_t) {
  const double theta = p.number("theta");
  const double pnorm = p.number("p");
  const auto report = signaling::run_pnorm_signal(theta, pnorm);
  ExperimentOutput out;
  out.results["signal"] = signaling::to_json(report);
  std::vector<std::vector<double>> rows;
  json sweep = json::array();
  for (double pv : p.numbers("p_sweep")) {
    const auto r = signaling::run_pnorm_signal(theta, pv);
    rows.push_back({pv, r.trace_dist, r.holevo_bits});
    sweep.push_back({{"p", pv}, {"trace_dist", r.trace_dist}});
  }
  out.results["p_sweep"] = sweep;
  out.files.push_back({"pnorm_sweep.csv", csv_table({"p", "trace_dist", "holevo_bits"}, rows)});
  add_signal_summary(out, report);
  return out;
}

ExperimentOutput run_constant_signal(const Params& p, std::uint64_t) {
  const std::string variant = p.string("variant");
  if (variant != "q2" && variant != "q3") throw ValidationError("variant must be \"q2\" or \"q3\"");
  const auto report =
      variant == "q2" ? signaling::run_constant_signal() : signaling::run_constant_signal_q3();
  ExperimentOutput out;
  out.results["signal"] = signaling::to_json(report);
  out.results["holevo_bits"] = report.holevo_bits;
  out.results["expected_holevo_bits"] = binary_entropy(0.75) - 0.5;
  add_signal_summary(out, report);
  return out;
}

ExperimentOutput run_no_signaling_sweep(const Params& p, std::uint64_t seed) {
  const std::string family = p.string("family");
  signaling::SweepFamily f;
  if (family == "complete") f = signaling::SweepFamily::CompleteChannels;
  else if (family == "unitary") f = signaling::SweepFamily::Unitaries;
  else throw ValidationError("family must be \"complete\" or \"unitary\"");
  const auto r = signaling::no_signaling_sweep(p.count("channels", 1, 1'000'000), seed, f,
                                               p.boolean("insert_noncomplete"));
  ExperimentOutput out;
  out.results = signaling::to_json(r);
  out.summary.push_back({"cases", std::to_string(r.cases)});
  out.summary.push_back({"max_violation", fmt(r.max_violation)});
  if (r.noncomplete_violation) out.summary.push_back({"noncomplete_violation", fmt(*r.noncomplete_violation)});
  return out;
}

// ---------------------------------------------------------------- complexity

void add_algorithm_summary(ExperimentOutput& out, const complexity::AlgorithmResult& r) {
  out.summary.push_back({"decision", r.decision ? "true" : "false"});
  out.summary.push_back({"success_probability", fmt(r.success_probability)});
  if (r.count) out.summary.push_back({"count", std::to_string(*r.count)});
}

ExperimentOutput run_sat_g(const Params& p, std::uint64_t seed) {
  const auto o = oracle_param(p, seed);
  const auto r = complexity::sat_via_g(o, p.number("epsilon"), p.count("shots", 1, 1'000'000), seed);
  ExperimentOutput out;
  out.results["oracle"] = oracle_summary(o);
  out.results["algorithm"] = complexity::to_json(r);
  out.results["truth"] = o.satisfiable();
  add_algorithm_summary(out, r);
  return out;
}

ExperimentOutput run_nondet_r(const Params& p, std::uint64_t seed) {
  const auto o = oracle_param(p, seed);
  const std::string mode = p.string("mode");
  complexity::NondetMode m;
  if (mode == "or") m = complexity::NondetMode::OrDecision;
  else if (mode == "count") m = complexity::NondetMode::Count;
  else if (mode == "qbf") m = complexity::NondetMode::Qbf;
  else throw ValidationError("mode must be \"or\", \"count\" or \"qbf\"");
  const std::string prefix = p.string("prefix");
  const auto r = complexity::nondet_via_r(o, m, prefix);
  ExperimentOutput out;
  out.results["oracle"] = oracle_summary(o);
  out.results["algorithm"] = complexity::to_json(r);
  if (m == complexity::NondetMode::Qbf) out.results["truth"] = complexity::evaluate_qbf(o, prefix);
  else if (m == complexity::NondetMode::Count) out.results["truth"] = o.count();
  else out.results["truth"] = o.satisfiable();
  add_algorithm_summary(out, r);
  return out;
}

ExperimentOutput run_postselect_sat(const Params& p, std::uint64_t seed) {
  const auto o = oracle_param(p, seed);
  const auto r = complexity::sat_via_postselection(o, seed);
  ExperimentOutput out;
  out.results["oracle"] = oracle_summary(o);
  out.results["algorithm"] = complexity::to_json(r);
  out.results["truth"] = o.satisfiable();
  add_algorithm_summary(out, r);
  return out;
}

ExperimentOutput run_simulate_q2(const Params& p, std::uint64_t seed) {
  const std::size_t qubits = p.count("qubits", 2, 12);
  const std::size_t samples = p.count("samples", 1, 100'000);
  const double phi = p.number("phi");
  std::vector<std::vector<double>> rows;
  double max_dev = 0.0, mean = 0.0;
  std::size_t successes = 0;
  // An explicit real amplitude vector replaces the random samples.
  const std::vector<double> amps = p.numbers("amplitudes");
  std::optional<PureState> fixed;
  if (!amps.empty()) {
    std::size_t q = 0;
    while ((std::size_t{1} << q) < amps.size()) ++q;
    if ((std::size_t{1} << q) != amps.size() || q == 0)
      throw ValidationError("amplitudes: length must be a power of two >= 2");
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v[static_cast<Eigen::Index>(i)] = amps[i];
    fixed = PureState(v, Dims(q, 2));
  }
  const std::size_t runs = fixed ? 1 : samples;
  for (std::size_t i = 0; i < runs; ++i) {
    Rng rng = trial_rng(seed, 0, i);
    const PureState psi = fixed ? *fixed : random_state(Dims(qubits, 2), rng);
    const auto sim = complexity::simulate_q2(psi, phi, seed + i);
    max_dev = std::max(max_dev, std::abs(sim.success_prob - sim.norm_factor / 2.0));
    mean += sim.success_prob;
    successes += sim.success ? 1 : 0;
    rows.push_back({static_cast<double>(i), sim.norm_factor, sim.success_prob, sim.success ? 1.0 : 0.0});
  }
  mean /= static_cast<double>(runs);
  ExperimentOutput out;
  out.results = {{"samples", runs},
                 {"qubits", fixed ? fixed->num_subsystems() : qubits},
                 {"mean_success_prob", mean},
                 {"max_deviation_from_half_norm", max_dev},
                 {"successes", successes}};
  out.files.push_back(
      {"simulate_q2.csv", csv_table({"index", "norm_factor", "success_prob", "success"}, rows)});
  out.summary.push_back({"mean_success_prob", fmt(mean)});
  out.summary.push_back({"max_deviation_from_half_norm", fmt(max_dev)});
  return out;
}

ExperimentOutput run_interferometric(const Params& p, std::uint64_t) {
  const std::size_t n = p.count("n", 1, 14);
  const json& marked = p.raw("marked");
  std::size_t x = (std::size_t{1} << n) - 1;
  if (!marked.is_null()) {
    if (!marked.is_number_integer() || marked.get<long long>() < 0 ||
        static_cast<std::size_t>(marked.get<long long>()) >= (std::size_t{1} << n))
      throw ValidationError("marked must be an integer in [0, 2^n)");
    x = static_cast<std::size_t>(marked.get<long long>());
  }
  complexity::InterferometryOptions opts;
  opts.theta_points = p.count("theta_points", 3, 1'000'000);
  opts.sigma = p.number("sigma");
  const auto r = complexity::interferometric_search(complexity::BooleanOracle::from_solutions(n, {x}), opts);

  std::vector<std::vector<double>> fringe;
  for (const auto& f : r.fringe) fringe.push_back({f.theta, f.intensity, complexity::fringe_closed_form(n, f.theta)});

  const std::size_t lo = p.count("decay_n_min", 1, 14);
  const std::size_t hi = p.count("decay_n_max", lo, 14);
  std::vector<std::vector<double>> decay;
  for (std::size_t k = lo; k <= hi; ++k) {
    const auto o = complexity::BooleanOracle::from_solutions(k, {(std::size_t{1} << k) - 1});
    decay.push_back({static_cast<double>(k), complexity::fringe_intensity(o, 0.0),
                     4.0 * std::ldexp(1.0, -static_cast<int>(k))});
  }
  ExperimentOutput out;
  out.results = complexity::to_json(r);
  out.results.erase("fringe");
  out.results["dark_closed_form"] = complexity::fringe_closed_form(n, 0.0);
  out.results["bright_closed_form"] = complexity::fringe_closed_form(n, kPi);
  out.results["gaussian_ratio_closed_form"] = complexity::gaussian_ratio_closed_form(n, opts.sigma);
  out.files.push_back({"fringe.csv", csv_table({"theta", "intensity", "closed_form"}, fringe)});
  out.files.push_back({"decay.csv", csv_table({"n", "detect_prob", "closed_form"}, decay)});
  out.summary.push_back({"detect_prob", fmt(r.detect_prob)});
  out.summary.push_back({"bright", fmt(r.bright)});
  out.summary.push_back({"period_mean", fmt(r.period_mean)});
  return out;
}

ExperimentOutput run_grover(const Params& p, std::uint64_t seed) {
  const auto o = oracle_param(p, seed);
  const auto r = complexity::grover_baseline(o, p.count("shots_per_iteration", 1, 100'000), seed);
  ExperimentOutput out;
  out.results["oracle"] = oracle_summary(o);
  out.results["algorithm"] = complexity::to_json(r);
  out.results["truth"] = o.satisfiable();
  add_algorithm_summary(out, r);
  return out;
}

// ---------------------------------------------------------------- optics

void add_visibilities(ExperimentOutput& out, const std::vector<optics::Pattern>& patterns) {
  for (const auto& pat : patterns) out.summary.push_back({"visibility_" + pat.label, fmt(pat.visibility)});
}

ExperimentOutput run_innsbruck(const Params& p, std::uint64_t) {
  const auto cfg = optics_config(p);
  using optics::AlicePoint;
  using optics::AlicePlane;
  std::vector<optics::Pattern> coinc;
  for (AlicePoint pt : {AlicePoint::F, AlicePoint::FPrime, AlicePoint::FDoublePrime, AlicePoint::L, AlicePoint::M})
    coinc.push_back(optics::coincidence_pattern(cfg, pt, false));
  std::vector<optics::Pattern> singles;
  for (AlicePlane pl : {AlicePlane::Focal, AlicePlane::Imaging, AlicePlane::None})
    singles.push_back(optics::singles_pattern(cfg, pl, false));
  ExperimentOutput out;
  out.results["config_hash"] = optics::config_hash(cfg);
  out.results["coincidences"] = pattern_summary(coinc, cfg);
  out.results["singles"] = pattern_summary(singles, cfg);
  out.files.push_back({"coincidences.csv", optics::patterns_csv(coinc)});
  out.files.push_back({"singles.csv", optics::patterns_csv(singles)});
  add_visibilities(out, singles);
  return out;
}

ExperimentOutput run_modified_innsbruck(const Params& p, std::uint64_t) {
  const auto cfg = optics_config(p);
  using optics::AlicePoint;
  using optics::AlicePlane;
  optics::Pattern rf = optics::singles_pattern(cfg, AlicePlane::Focal, true);
  rf.label = "R_F";
  optics::Pattern ri = optics::singles_pattern(cfg, AlicePlane::Imaging, true);
  ri.label = "R_I";
  std::vector<optics::Pattern> coinc;
  for (AlicePoint pt : {AlicePoint::F, AlicePoint::L, AlicePoint::M})
    coinc.push_back(optics::coincidence_pattern(cfg, pt, true));
  const auto filter = optics::filter_geometry_check(cfg);
  ExperimentOutput out;
  out.results["config_hash"] = optics::config_hash(cfg);
  out.results["singles"] = pattern_summary({rf, ri}, cfg);
  out.results["coincidences"] = pattern_summary(coinc, cfg);
  out.results["filter_check"] = optics::to_json(filter);
  out.files.push_back({"R_F.csv", optics::patterns_csv({rf})});
  out.files.push_back({"R_I.csv", optics::patterns_csv({ri})});
  out.files.push_back({"coincidences.csv", optics::patterns_csv(coinc)});
  add_visibilities(out, {rf, ri});
  out.summary.push_back({"filter_ok", filter.ok ? "true" : "false"});
  return out;
}

ExperimentOutput run_spreading_sweep(const Params& p, std::uint64_t) {
  auto cfg = optics_config(p);
  const std::size_t points = p.count("theta_points", 2, 100'000);
  const auto at = optics::spreading_pattern(cfg);

  std::vector<std::vector<double>> rows;
  double max_dev = 0.0, max_singles_var = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    cfg.spreading_angle = (kPi / 2.0) * static_cast<double>(i) / static_cast<double>(points - 1);
    const auto s = optics::spreading_pattern(cfg);
    const double expected = std::abs(std::cos(2.0 * cfg.spreading_angle));
    const auto [lo, hi] = std::minmax_element(s.singles.intensity.begin(), s.singles.intensity.end());
    max_dev = std::max(max_dev, std::abs(s.coincident_f.visibility - expected));
    max_singles_var = std::max(max_singles_var, *hi - *lo);
    rows.push_back({cfg.spreading_angle, s.coincident_f.visibility, expected, *hi - *lo});
  }
  cfg.spreading_angle = kPi / 4.0;
  const double crossover = optics::spreading_pattern(cfg).coincident_f.visibility;

  ExperimentOutput out;
  out.results["patterns"] = pattern_summary({at.singles, at.coincident_l, at.coincident_m, at.coincident_f},
                                            optics_config(p));
  out.results["max_visibility_deviation"] = max_dev;
  out.results["max_singles_variation"] = max_singles_var;
  out.results["crossover_visibility"] = crossover;
  out.files.push_back({"spreading_sweep.csv",
                       csv_table({"theta_s", "visibility", "abs_cos_2theta", "singles_variation"}, rows)});
  out.files.push_back({"spreading_patterns.csv",
                       optics::patterns_csv({at.singles, at.coincident_l, at.coincident_m, at.coincident_f})});
  out.summary.push_back({"max_visibility_deviation", fmt(max_dev)});
  out.summary.push_back({"max_singles_variation", fmt(max_singles_var)});
  out.summary.push_back({"crossover_visibility", fmt(crossover)});
  return out;
}

ExperimentOutput run_remote_ensembles(const Params& p, std::uint64_t) {
  const auto r = optics::remote_ensembles(p.boolean("unfiltered"));
  ExperimentOutput out;
  out.results = optics::to_json(r);
  out.summary.push_back({"trace_dist", fmt(r.trace_dist)});
  out.summary.push_back({"defect_p", fmt(r.defect_p)});
  out.summary.push_back({"defect_q", fmt(r.defect_q)});
  return out;
}

ExperimentOutput run_complementarity(const Params& p, std::uint64_t) {
  const auto curve = optics::complementarity_curve(optics::complementarity_grid(p.count("points", 2, 1'000'000)));
  std::vector<std::vector<double>> rows;
  double dc = 0.0, de = 0.0, dsum = 0.0;
  for (const auto& pt : curve) {
    rows.push_back({pt.theta, pt.coherence, pt.entanglement});
    dc = std::max(dc, std::abs(pt.coherence - std::cos(pt.theta)));
    de = std::max(de, std::abs(pt.entanglement - std::sin(pt.theta)));
    dsum = std::max(dsum, std::abs(pt.coherence * pt.coherence + pt.entanglement * pt.entanglement - 1.0));
  }
  ExperimentOutput out;
  out.results = {{"points", curve.size()},
                 {"max_coherence_deviation", dc},
                 {"max_entanglement_deviation", de},
                 {"max_circle_deviation", dsum}};
  out.files.push_back({"complementarity.csv", csv_table({"theta", "C", "E"}, rows)});
  out.summary.push_back({"max_circle_deviation", fmt(dsum)});
  return out;
}

ExperimentOutput run_filter_check(const Params& p, std::uint64_t) {
  const auto r = optics::filter_geometry_check(optics_config(p), p.number("margin"));
  ExperimentOutput out;
  out.results = optics::to_json(r);
  out.summary.push_back({"ok", r.ok ? "true" : "false"});
  out.summary.push_back({"aperture_ratio", fmt(r.aperture_ratio)});
  out.summary.push_back({"focal_ratio", fmt(r.focal_ratio)});
  return out;
}

ExperimentOutput run_povm_integral(const Params& p, std::uint64_t) {
  const auto cfg = optics_config(p);
  const auto grid = optics::bob_povm_integral(cfg);
  const std::size_t points = p.count("phase_points", 2, 10'000'000);
  const auto one = optics::bob_povm_integral_over_phase(0.0, 2.0 * kPi, points);
  const auto half = optics::bob_povm_integral_over_phase(0.0, kPi, points);
  ExperimentOutput out;
  out.results = {{"grid", optics::to_json(grid)},
                 {"one_period", optics::to_json(one)},
                 {"half_period", optics::to_json(half)}};
  out.summary.push_back({"grid_defect", fmt(grid.defect)});
  out.summary.push_back({"one_period_defect", fmt(one.defect)});
  out.summary.push_back({"half_period_defect", fmt(half.defect)});
  return out;
}

json oracle_default() { return {{"n", 6}, {"solutions", {5, 42}}}; }

std::vector<Experiment> build_registry() {
  std::vector<Experiment> r;
  r.push_back({"g-signal", "G(eps)^m on Alice's half of a Bell pair shifts Bob's reduced state",
               "non-complete gate signaling",
               {{"epsilon", 0.1}, {"m", 5}, {"state", "phi+"}, {"theta", kPi / 3.0}}, run_g_signal});
  r.push_back({"r-signal", "nonlinear OR gate distinguishes Alice's measurement basis",
               "nonlinear gate signaling", {{"trials", 10000}}, run_r_signal});
  r.push_back({"pnorm-signal", "p-norm measurement rule signals unless p = 2",
               "p-norm measurement signaling",
               {{"theta", kPi / 4.0}, {"p", 3.0}, {"p_sweep", {0.0, 1.0, 2.0, 3.0, 4.0, 6.0}}},
               run_pnorm_signal});
  r.push_back({"constant-signal", "constant gate Q on Alice's half; Holevo quantity at Bob",
               "constant-gate signaling", {{"variant", "q2"}}, run_constant_signal});
  r.push_back({"no-signaling-sweep", "random complete channels leave Bob's state unchanged",
               "no-signaling theorem",
               {{"channels", 1000}, {"family", "complete"}, {"insert_noncomplete", false}},
               run_no_signaling_sweep});
  r.push_back({"sat-g", "satisfiability via repeated G gates on the flag qubit", "G-gate SAT",
               {{"oracle", oracle_default()}, {"epsilon", 1.0}, {"shots", 32}}, run_sat_g});
  r.push_back({"nondet-r", "OR/count/QBF evaluation with the nonlinear R gate", "R-gate nondeterminism",
               {{"oracle", oracle_default()}, {"mode", "or"}, {"prefix", ""}}, run_nondet_r});
  r.push_back({"postselect-sat", "satisfiability by postselecting the flag qubit", "postselection SAT",
               {{"oracle", oracle_default()}}, run_postselect_sat});
  r.push_back({"simulate-q2", "Q2 simulated by a unitary plus measurement, success N/2",
               "constant-gate simulation",
               {{"qubits", 3}, {"phi", 0.7}, {"samples", 100}, {"amplitudes", json::array()}}, run_simulate_q2});
  r.push_back({"interferometric", "interferometric search with the constant gate; fringes and decay",
               "interferometric quantum computing",
               {{"n", 6}, {"marked", nullptr}, {"theta_points", 257}, {"sigma", kPi},
                {"decay_n_min", 2}, {"decay_n_max", 12}},
               run_interferometric});
  r.push_back({"grover", "Grover search baseline", "Grover baseline",
               {{"oracle", oracle_default()}, {"shots_per_iteration", 4}}, run_grover});
  r.push_back({"innsbruck", "unfiltered six-mode patterns: coincidences and flat singles",
               "Innsbruck experiment", optics_defaults(), run_innsbruck});
  r.push_back({"modified-innsbruck", "direction-filtered patterns R_F (fringed) and R_I (flat)",
               "Modified Innsbruck experiment", optics_defaults(), run_modified_innsbruck});
  r.push_back({"spreading-sweep", "mode spreading: visibility |cos 2 theta| and constant singles",
               "spreading model", optics_defaults({{"theta_points", 50}}), run_spreading_sweep});
  r.push_back({"remote-ensembles", "rho_P vs rho_Q and their projector-sum defects", "remote ensembles",
               {{"unfiltered", true}}, run_remote_ensembles});
  r.push_back({"complementarity", "coherence/entanglement trade-off C^2 + E^2 = 1", "complementarity",
               {{"points", 100}}, run_complementarity});
  r.push_back({"filter-check", "direction filter geometry 1 << delta/lambda << G/sigma",
               "filter condition", optics_defaults({{"margin", 10.0}}), run_filter_check});
  r.push_back({"povm-integral", "integral of Bob's screen POVM over whole and half periods",
               "screen POVM completeness", optics_defaults({{"phase_points", 257}}), run_povm_integral});
  return r;
}

}  // namespace

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> r = build_registry();
  return r;
}

const Experiment* find_experiment(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace qsim::cli
