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

#include "qsim/gates/gate_spec.hpp"

#include <cmath>

#include "qsim/gates/nonstandard.hpp"

namespace qsim::gates {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ValidationError(std::string(what) + " must be finite");
}

double number_param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params.at(key).is_number())
    throw ValidationError(std::string("gate spec: missing numeric parameter '") + key + "'");
  return params.at(key).get<double>();
}

}  // namespace

std::string kind_name(const GateSpec& spec) {
  return std::visit(overloaded{
                        [](const GGate&) { return "GGate"; },
                        [](const NonlinearOr&) { return "NonlinearOR"; },
                        [](const NonlinearAnd&) { return "NonlinearAND"; },
                        [](const ConstantQ2&) { return "ConstantQ2"; },
                        [](const ConstantQ3&) { return "ConstantQ3"; },
                        [](const PostSelectQ2&) { return "PostSelectQ2"; },
                        [](const PostSelectQ3&) { return "PostSelectQ3"; },
                        [](const Deleter2&) { return "Deleter2"; },
                        [](const Deleter3&) { return "Deleter3"; },
                        [](const PNormMeasure&) { return "PNormMeasure"; },
                    },
                    spec);
}

void validate(const GateSpec& spec) {
  std::visit(overloaded{
                 [](const GGate& g) {
                   if (!(g.epsilon > 0.0) || !std::isfinite(g.epsilon))
                     throw ValidationError("GGate: epsilon must be > 0");
                   if (g.m < 1) throw ValidationError("GGate: m must be >= 1");
                 },
                 [](const ConstantQ2& q) { require_finite(q.phi, "ConstantQ2: phi"); },
                 [](const ConstantQ3& q) {
                   require_finite(q.phi1, "ConstantQ3: phi1");
                   require_finite(q.phi2, "ConstantQ3: phi2");
                 },
                 [](const PNormMeasure& p) {
                   if (!(p.p >= 0.0) || !std::isfinite(p.p))
                     throw ValidationError("PNormMeasure: p must be >= 0");
                 },
                 [](const auto&) {},
             },
             spec);
}

Matrix gate_matrix(const GateSpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const GGate& g) { return g_gate(g.epsilon, g.m); },
                        [](const ConstantQ2& q) { return constant_q2(q.phi); },
                        [](const ConstantQ3& q) { return constant_q3(q.phi1, q.phi2); },
                        [](const PostSelectQ2&) { return post_select_projector(2, 0); },
                        [](const PostSelectQ3&) { return post_select_projector(3, 0); },
                        [](const auto&) -> Matrix {
                          throw ValidationError("gate kind has no matrix form");
                        },
                    },
                    spec);
}

nlohmann::json to_json(const GateSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  std::visit(overloaded{
                 [&](const GGate& g) {
                   params["epsilon"] = g.epsilon;
                   params["m"] = g.m;
                 },
                 [&](const ConstantQ2& q) { params["phi"] = q.phi; },
                 [&](const ConstantQ3& q) {
                   params["phi1"] = q.phi1;
                   params["phi2"] = q.phi2;
                 },
                 [&](const PNormMeasure& p) { params["p"] = p.p; },
                 [](const auto&) {},
             },
             spec);
  return {{"kind", kind_name(spec)}, {"params", params}};
}

GateSpec gate_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ValidationError("gate spec must be an object with a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());

  GateSpec spec;
  if (kind == "GGate") {
    const double m = number_param(params, "m");
    if (m != std::floor(m)) throw ValidationError("GGate: m must be an integer");
    spec = GGate{number_param(params, "epsilon"), static_cast<int>(m)};
  } else if (kind == "NonlinearOR") {
    spec = NonlinearOr{};
  } else if (kind == "NonlinearAND") {
    spec = NonlinearAnd{};
  } else if (kind == "ConstantQ2") {
    spec = ConstantQ2{params.contains("phi") ? number_param(params, "phi") : 0.0};
  } else if (kind == "ConstantQ3") {
    spec = ConstantQ3{params.contains("phi1") ? number_param(params, "phi1") : 0.0,
                      params.contains("phi2") ? number_param(params, "phi2") : 0.0};
  } else if (kind == "PostSelectQ2") {
    spec = PostSelectQ2{};
  } else if (kind == "PostSelectQ3") {
    spec = PostSelectQ3{};
  } else if (kind == "Deleter2") {
    spec = Deleter2{};
  } else if (kind == "Deleter3") {
    spec = Deleter3{};
  } else if (kind == "PNormMeasure") {
    spec = PNormMeasure{number_param(params, "p")};
  } else {
    throw ValidationError("unknown gate kind '" + kind + "'");
  }
  validate(spec);
  return spec;
}

}  // namespace qsim::gates
