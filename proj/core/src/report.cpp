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
#include "entaudit/report.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace entaudit {

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 17> kNames{{
    {Axiom::P1, "P1"},
    {Axiom::P2, "P2"},
    {Axiom::P3, "P3"},
    {Axiom::P4, "P4"},
    {Axiom::M1, "M1"},
    {Axiom::M2, "M2"},
    {Axiom::M3, "M3"},
    {Axiom::M4, "M4"},
    {Axiom::M5, "M5"},
    {Axiom::L4, "L4"},
    {Axiom::L7, "L7"},
    {Axiom::PROP6, "PROP6"},
    {Axiom::KF_CONTINUITY, "KF-continuity"},
    {Axiom::KF_NORMALIZATION, "KF-normalization"},
    {Axiom::KF_SYMMETRY, "KF-symmetry"},
    {Axiom::KF_RECURSION, "KF-recursion"},
    {Axiom::TRACE_ASYMMETRY, "TRACE-ASYMMETRY"},
}};

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  for (const auto& [a, name] : kNames) {
    if (a == axiom) return name;
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

AxiomReport make_report(Axiom axiom, std::size_t samples, double worst_violation, double tolerance,
                        nlohmann::json witness, std::uint64_t seed) {
  AxiomReport r;
  r.axiom = axiom;
  r.samples_run = samples;
  // Non-finite evaluations count as unbounded violations.
  r.worst_violation = std::isfinite(worst_violation) ? worst_violation
                                                     : std::numeric_limits<double>::max();
  r.tolerance = tolerance;
  r.passed = r.worst_violation <= tolerance;
  r.witness = std::move(witness);
  r.seed = seed;
  return r;
}

AxiomReport not_applicable(Axiom axiom, std::uint64_t seed, std::string note) {
  AxiomReport r;
  r.axiom = axiom;
  r.applicable = false;
  r.passed = true;
  r.seed = seed;
  r.note = std::move(note);
  return r;
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json j;
  j["axiom"] = axiom_name(report.axiom);
  j["passed"] = report.passed;
  j["samples"] = report.samples_run;
  j["worst_violation"] = report.worst_violation;
  j["tolerance"] = report.tolerance;
  j["witness"] = report.witness;
  j["seed"] = report.seed;
  if (!report.applicable) j["applicable"] = false;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

AxiomReport report_from_json(const nlohmann::json& j) {
  AxiomReport r;
  const auto name = j.at("axiom").get<std::string>();
  const auto axiom = parse_axiom(name);
  if (!axiom) throw std::invalid_argument("axiom: unknown name '" + name + "'");
  r.axiom = *axiom;
  r.passed = j.at("passed").get<bool>();
  r.samples_run = j.at("samples").get<std::size_t>();
  r.worst_violation = j.at("worst_violation").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.witness = j.value("witness", nlohmann::json::object());
  r.seed = j.value("seed", std::uint64_t{0});
  r.applicable = j.value("applicable", true);
  r.note = j.value("note", std::string{});
  return r;
}

}  // namespace entaudit
