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
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace entaudit {

/// Postulates, lemmas and named checks an AxiomReport can refer to.
enum class Axiom {
  P1, P2, P3, P4,
  M1, M2, M3, M4, M5,
  L4, L7, PROP6,
  // Khinchin-Faddeev conditions on simplex functionals.
  KF_CONTINUITY, KF_NORMALIZATION, KF_SYMMETRY, KF_RECURSION,
  // Tr_1 / Tr_2 reduced-entropy asymmetry exhibit.
  TRACE_ASYMMETRY,
};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

/// Outcome of auditing one postulate.
///
/// `passed` is true exactly when `worst_violation <= tolerance`. The witness
/// holds the inputs that produced `worst_violation`; when it describes a
/// state it is itself a valid state document (see serialize.hpp).
struct AxiomReport {
  Axiom axiom = Axiom::P1;
  bool passed = true;
  std::size_t samples_run = 0;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  nlohmann::json witness = nlohmann::json::object();
  std::uint64_t seed = 0;
  /// False when the audit does not apply to the measure (e.g. M5 without a
  /// mixed-state evaluator). Such reports pass vacuously.
  bool applicable = true;
  std::string note;
};

/// Fills in `passed` from the violation and tolerance.
AxiomReport make_report(Axiom axiom, std::size_t samples, double worst_violation, double tolerance,
                        nlohmann::json witness, std::uint64_t seed);
AxiomReport not_applicable(Axiom axiom, std::uint64_t seed, std::string note);

nlohmann::json to_json(const AxiomReport& report);
AxiomReport report_from_json(const nlohmann::json& j);

}  // namespace entaudit
