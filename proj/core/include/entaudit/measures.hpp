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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entaudit/states.hpp"

namespace entaudit {

using PureEvaluator = std::function<double(const StateVector&)>;
using MixedEvaluator = std::function<double(const DensityOperator&)>;

/// A functional on bipartite states, in nats.
///
/// evaluate_pure returns scale * pure(psi). The mixed evaluator is optional;
/// when present it must agree with the pure one on projectors.
struct EntanglementMeasure {
  std::string name;
  PureEvaluator pure;
  MixedEvaluator mixed;  // empty when the measure is pure-state only
  double scale = 1.0;

  bool has_mixed() const { return static_cast<bool>(mixed); }
};

double evaluate_pure(const EntanglementMeasure& m, const StateVector& psi);
/// Throws std::logic_error when the measure has no mixed evaluator.
double evaluate_mixed(const EntanglementMeasure& m, const DensityOperator& rho);

/// Greatest cross norm of |psi><psi|: (sum_k sqrt(p_k))^2 over the Schmidt
/// coefficients. Lies in [1, min(d1, d2)].
double gamma_norm_pure(const StateVector& psi);
/// g ln g with g = gamma_norm_pure(psi).
double gamma_measure_pure(const StateVector& psi);

/// Largest number of nonzero entries a Schmidt profile may have; its
/// canonical state lives on an (n, n) system bounded by kMaxDimension.
inline constexpr std::size_t kMaxProfileLength = 16;

/// sum_i sqrt(p_i) |ii> on (n, n), n = number of entries above the Schmidt
/// cutoff (zero entries are dropped).
StateVector canonical_state(const ProbabilityDistribution& p);

/// E(p_1, ..., p_n): the measure on a state whose Schmidt coefficients are p.
double schmidt_profile_value(const EntanglementMeasure& m, const ProbabilityDistribution& p);

/// Reduced von Neumann entropy scaled by c. The mixed evaluator is the
/// reduced entropy with the second factor traced out. That functional is not
/// convex and does not vanish on separable mixed states; it is registered so
/// that the audits can exhibit those failures.
EntanglementMeasure svn_measure(double c = 1.0);
/// g ln g of the greatest cross norm; pure states only.
EntanglementMeasure gamma_measure();

/// True when a 50-sample probe on entangled states finds no value above 1e-12.
bool vanishes_identically(const EntanglementMeasure& m);

/// Name -> measure lookup. Registered measures are immutable.
///
/// Besides registered names, `svn-scaled:<c>` resolves to svn_measure(c)
/// for any finite c > 0.
class MeasureRegistry {
 public:
  /// Registry holding svn, gamma and shannon-schmidt.
  static MeasureRegistry with_builtins();

  /// Throws std::invalid_argument for duplicate names or for a measure that
  /// vanishes identically.
  void add(EntanglementMeasure m);
  /// Adds `alias` for an existing entry.
  void alias(const std::string& alias, const std::string& target);

  std::optional<EntanglementMeasure> find(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  EntanglementMeasure get(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, EntanglementMeasure, std::less<>> measures_;
};

}  // namespace entaudit
