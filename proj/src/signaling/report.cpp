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

#include <sstream>

#include "qsim/core/format.hpp"
#include "qsim/core/serialize.hpp"
#include "qsim/signaling/protocols.hpp"

namespace qsim::signaling {

nlohmann::json to_json(const SignalReport& report) {
  nlohmann::json j = {{"label", report.label},
                      {"rho_choice0", density_to_json(report.rho_choice0)},
                      {"rho_choice1", density_to_json(report.rho_choice1)},
                      {"trace_dist", report.trace_dist},
                      {"holevo_bits", report.holevo_bits},
                      {"details", report.details}};
  if (report.per_trial_stats) {
    const auto& s = *report.per_trial_stats;
    nlohmann::json series = nlohmann::json::array();
    for (const auto& t : s.series)
      series.push_back({{"ensemble", t.ensemble},
                        {"trials", t.trials},
                        {"ones", t.ones},
                        {"frequency", t.frequency},
                        {"analytic", t.analytic},
                        {"binomial_sigma", t.binomial_sigma}});
    nlohmann::json rep = nlohmann::json::array();
    for (const auto& r : s.repetition)
      rep.push_back({{"block_size", r.block_size}, {"blocks", r.blocks}, {"error_rate", r.error_rate}});
    j["per_trial_stats"] = {
        {"series", series}, {"repetition", rep}, {"fitted_exponent", s.fitted_exponent}};
  }
  return j;
}

nlohmann::json to_json(const SweepResult& result) {
  nlohmann::json j = {{"cases", result.cases}, {"max_violation", result.max_violation}};
  if (result.noncomplete_violation) j["noncomplete_violation"] = *result.noncomplete_violation;
  return j;
}

std::string trial_stats_csv(const TrialStats& stats) {
  std::ostringstream out;
  out << "ensemble,trials,ones,frequency,analytic,sigma\n";
  for (const auto& t : stats.series)
    out << t.ensemble << ',' << t.trials << ',' << t.ones << ',' << format_double(t.frequency) << ','
        << format_double(t.analytic) << ',' << format_double(t.binomial_sigma) << '\n';
  return out.str();
}

}  // namespace qsim::signaling
