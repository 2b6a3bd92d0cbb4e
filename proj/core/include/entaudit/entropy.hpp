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
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "entaudit/linalg.hpp"
#include "entaudit/report.hpp"
#include "entaudit/states.hpp"

namespace entaudit {

/// Entropy unit. Computations run in nats; bits are a display conversion.
enum class LogBase { nat, bit };

double to_base(double nats, LogBase base);

/// -sum p_i ln p_i over arbitrary non-negative weights, with 0 ln 0 = 0.
/// Weights are clamped to [0, 1] first.
double entropy_of_weights(std::span<const double> weights);

double shannon(const ProbabilityDistribution& p, LogBase base = LogBase::nat);

/// Black-box map from the probability simplex to the reals.
struct SimplexFunctional {
  std::string name;
  std::function<double(const ProbabilityDistribution&)> evaluate;
};

/// Longest distribution a SimplexFunctional is required to accept.
inline constexpr std::size_t kMaxSimplexLength = 64;

SimplexFunctional shannon_functional();

struct KhinchinOptions {
  std::size_t samples = 200;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Longest base distribution drawn for the symmetry and recursion checks.
  std::size_t max_length = 6;
};

/// Left and right side of the recursion condition
///   S(p_1..p_{n-1}, eta p_n, (1-eta) p_n) = S(p) + p_n S(eta, 1-eta).
struct RecursionSides {
  double lhs;
  double rhs;
  double gap() const;
};
RecursionSides recursion_sides(const SimplexFunctional& s, const ProbabilityDistribution& p,
                               double eta);

/// Continuity, normalization, symmetry and recursion reports, in that order.
///
/// The recursion witness carries, besides the worst sample, the fixed probe
/// p = (1/2, 1/2), eta = 1/2 under "canonical_probe".
std::vector<AxiomReport> audit_khinchin(const SimplexFunctional& s, const KhinchinOptions& options = {});

/// -Tr(x ln x) of the reduced state that keeps the untraced factor. Tracing
/// the second factor is the reduced entropy as usually written.
double svn_mixed(const DensityOperator& rho, Subsystem traced = Subsystem::second,
                 LogBase base = LogBase::nat);

/// Shannon entropy of the Schmidt coefficients.
double svn_pure(const StateVector& psi, LogBase base = LogBase::nat);

}  // namespace entaudit
