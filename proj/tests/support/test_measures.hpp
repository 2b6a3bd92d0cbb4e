// Copyright 2026 The entaudit Authors
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
// Deliberately flawed or trivial functionals used as audit targets.
#pragma once

#include <cmath>
#include <complex>
#include <numeric>

#include "entaudit/entropy.hpp"
#include "entaudit/measures.hpp"
#include "entaudit/schmidt.hpp"
#include "entaudit/states.hpp"

namespace entaudit::testing {

/// E(psi) = |psi_0|^2; not invariant under local unitaries.
inline EntanglementMeasure first_amplitude_measure() {
  return {"first-amplitude", [](const StateVector& psi) { return std::norm(psi[0]); }, {}, 1.0};
}

/// E(psi) = d1; changes under embedding.
inline EntanglementMeasure dimension_measure() {
  return {"dimension", [](const StateVector& psi) { return static_cast<double>(psi.d1()); }, {}, 1.0};
}

/// Schmidt rank; discontinuous at product states.
inline EntanglementMeasure rank_measure() {
  return {"rank", [](const StateVector& psi) { return static_cast<double>(schmidt_rank(psi)); }, {}, 1.0};
}

inline EntanglementMeasure constant_measure() {
  return {"constant", [](const StateVector&) { return 1.0; }, {}, 1.0};
}

/// Trace distance to the maximally mixed state; a convex function of rho.
inline double distance_to_maximally_mixed(const DensityOperator& rho) {
  const std::size_t n = rho.matrix().rows();
  auto diff = rho.matrix();
  for (std::size_t i = 0; i < n; ++i) diff(i, i) -= 1.0 / static_cast<double>(n);
  return 0.5 * trace_norm(diff);
}

inline EntanglementMeasure trace_distance_measure() {
  return {"trace-distance",
          [](const StateVector& psi) { return distance_to_maximally_mixed(projector(psi)); },
          distance_to_maximally_mixed, 1.0};
}

/// Collision entropy -ln sum p_i^2.
inline SimplexFunctional renyi2_functional() {
  return {"renyi-2", [](const ProbabilityDistribution& p) {
            double sum = 0.0;
            for (double x : p.weights()) sum += x * x;
            return -std::log(sum);
          }};
}

inline SimplexFunctional zero_functional() {
  return {"zero", [](const ProbabilityDistribution&) { return 0.0; }};
}

/// Shannon entropy plus a jump at p_0 = 1/3.
inline SimplexFunctional step_functional() {
  return {"step", [](const ProbabilityDistribution& p) {
            return shannon(p) + (p[0] > 1.0 / 3.0 ? 0.1 : 0.0);
          }};
}

}  // namespace entaudit::testing
