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
#include "entaudit/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "entaudit/entropy.hpp"
#include "entaudit/random.hpp"
#include "entaudit/schmidt.hpp"

namespace entaudit {

double evaluate_pure(const EntanglementMeasure& m, const StateVector& psi) {
  return m.scale * m.pure(psi);
}

double evaluate_mixed(const EntanglementMeasure& m, const DensityOperator& rho) {
  if (!m.has_mixed()) throw std::logic_error("measure '" + m.name + "' has no mixed-state evaluator");
  return m.scale * m.mixed(rho);
}

double gamma_norm_pure(const StateVector& psi) {
  double root_sum = 0.0;
  for (double p : schmidt_decompose(psi).coefficients) root_sum += std::sqrt(p);
  return root_sum * root_sum;
}

double gamma_measure_pure(const StateVector& psi) {
  const double g = gamma_norm_pure(psi);
  return g * std::log(g);
}

StateVector canonical_state(const ProbabilityDistribution& p) {
  std::vector<double> kept;
  for (double w : p.weights()) {
    if (w > kSchmidtCutoff) kept.push_back(w);
  }
  const std::size_t n = kept.size();
  if (n > kMaxProfileLength) {
    throw std::length_error("Schmidt profile has " + std::to_string(n) + " nonzero entries; limit is " +
                            std::to_string(kMaxProfileLength));
  }
  ComplexVector amps(n * n);
  for (std::size_t i = 0; i < n; ++i) amps[i * n + i] = std::sqrt(kept[i]);
  return StateVector(n, n, std::move(amps));
}

double schmidt_profile_value(const EntanglementMeasure& m, const ProbabilityDistribution& p) {
  return evaluate_pure(m, canonical_state(p));
}

EntanglementMeasure svn_measure(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("svn scale must be finite and positive");
  EntanglementMeasure m;
  m.name = c == 1.0 ? "svn" : "svn-scaled:" + std::to_string(c);
  m.pure = [](const StateVector& psi) { return svn_pure(psi); };
  m.mixed = [](const DensityOperator& rho) { return svn_mixed(rho, Subsystem::second); };
  m.scale = c;
  return m;
}

EntanglementMeasure gamma_measure() {
  EntanglementMeasure m;
  m.name = "gamma";
  m.pure = gamma_measure_pure;
  return m;
}

bool vanishes_identically(const EntanglementMeasure& m) {
  constexpr std::uint64_t kProbeSeed = 0x5eed;
  constexpr std::size_t kProbes = 50;
  for (std::size_t k = 0; k < kProbes; ++k) {
    Rng rng = Rng::substream(kProbeSeed, k);
    const auto d1 = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const auto d2 = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const auto psi = random_pure_state(d1, d2, rng);
    if (std::abs(evaluate_pure(m, psi)) > 1e-12) return false;
  }
  return true;
}

MeasureRegistry MeasureRegistry::with_builtins() {
  MeasureRegistry r;
  r.add(svn_measure());
  r.add(gamma_measure());
  r.alias("shannon-schmidt", "svn");
  return r;
}

void MeasureRegistry::add(EntanglementMeasure m) {
  if (m.name.empty() || !m.pure) throw std::invalid_argument("measure needs a name and a pure evaluator");
  if (measures_.contains(m.name)) throw std::invalid_argument("measure '" + m.name + "' already registered");
  if (vanishes_identically(m)) {
    throw std::invalid_argument("measure '" + m.name + "' vanishes identically");
  }
  auto name = m.name;
  measures_.emplace(std::move(name), std::move(m));
}

void MeasureRegistry::alias(const std::string& alias, const std::string& target) {
  auto m = get(target);
  if (measures_.contains(alias)) throw std::invalid_argument("measure '" + alias + "' already registered");
  m.name = alias;
  measures_.emplace(alias, std::move(m));
}

std::optional<EntanglementMeasure> MeasureRegistry::find(std::string_view name) const {
  if (auto it = measures_.find(name); it != measures_.end()) return it->second;
  constexpr std::string_view kScaled = "svn-scaled:";
  if (name.starts_with(kScaled)) {
    const std::string text(name.substr(kScaled.size()));
    std::size_t used = 0;
    double c = 0.0;
    try {
      c = std::stod(text, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != text.size() || !(c > 0.0) || !std::isfinite(c)) return std::nullopt;
    auto m = svn_measure(c);
    m.name = std::string(name);
    return m;
  }
  return std::nullopt;
}

EntanglementMeasure MeasureRegistry::get(std::string_view name) const {
  if (auto m = find(name)) return *std::move(m);
  throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

std::vector<std::string> MeasureRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, m] : measures_) out.push_back(name);
  return out;
}

}  // namespace entaudit
