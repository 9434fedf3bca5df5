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

#include <vector>

#include <json.hpp>

#include "qsim/core/channel.hpp"
#include "qsim/optics/config.hpp"

// Remote ensembles, filter geometry, Bob's screen POVM, the direction filter
// and the coherence/entanglement trade-off.

namespace qsim::optics {

struct RemoteEnsembles {
  DensityOperator rho_p;  ///< Bob's state after Alice's focal-plane detections
  DensityOperator rho_q;  ///< Bob's state after Alice's imaging-plane detections
  double trace_dist = 0.0;
  /// Operator-norm distance of each projector sum from I_6.
  double defect_p = 0.0;
  double defect_q = 0.0;
};

/// rho_P ~ |2+5><2+5| + |1+4><1+4| + |3+6><3+6| and
/// rho_Q ~ |1+2+3><1+2+3| + |4+5+6><4+5+6|, unit trace. Filtered, every
/// ensemble vector is first projected onto modes 2 and 5 and weighted by the
/// surviving norm.
RemoteEnsembles remote_ensembles(bool unfiltered = true);

struct FilterCheck {
  bool ok = false;
  double aperture_ratio = 0.0;  ///< delta / lambda
  double focal_ratio = 0.0;     ///< (G_f / sigma) / (delta / lambda)
  double margin = 0.0;
};

/// ok iff both ratios reach `margin` (1 << delta/lambda << G_f/sigma).
FilterCheck filter_geometry_check(const OpticsConfig& cfg, double margin = 10.0);

struct PovmIntegral {
  Matrix integral;  ///< normalized integral of E_z^- E_z^+ on span(2, 5)
  double defect = 0.0;  ///< operator-norm distance from I_2
  double periods = 0.0;  ///< fringe periods covered
};

/// (|2> + e^{-i gamma}|5>)(<2| + e^{i gamma}<5|).
Matrix bob_povm_element(double gamma);

/// Trapezoid integral over cfg's z grid divided by its span. Throws
/// ValidationError when the grid covers fewer than 20 fringe periods.
PovmIntegral bob_povm_integral(const OpticsConfig& cfg);

/// Same integral over the phase interval [start, end] with `points` samples.
PovmIntegral bob_povm_integral_over_phase(double start, double end, std::size_t points);

/// Isometry from the six modes into six modes plus four sinks: modes 2 and 5
/// pass, modes 1, 3, 4, 6 go to sinks 7..10.
OperatorSet direction_filter();

struct ComplementarityPoint {
  double theta = 0.0;
  double coherence = 0.0;     ///< 2 |rho_01|
  double entanglement = 0.0;  ///< 2 sqrt(lambda_- lambda_+)
};

/// U = cos(theta) I + i sin(theta) CNOT on |+>|0>, monitor traced out.
std::vector<ComplementarityPoint> complementarity_curve(const std::vector<double>& thetas);

/// `points` evenly spaced angles over [0, pi/2].
std::vector<double> complementarity_grid(std::size_t points = 100);

nlohmann::json to_json(const RemoteEnsembles& r);
nlohmann::json to_json(const FilterCheck& r);
nlohmann::json to_json(const PovmIntegral& r);

}  // namespace qsim::optics
