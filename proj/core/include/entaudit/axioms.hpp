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
#include <span>
#include <string_view>
#include <vector>

#include "entaudit/measures.hpp"
#include "entaudit/report.hpp"
#include "entaudit/states.hpp"

namespace entaudit {

struct AuditOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  /// Equality tolerance for the invariance, additivity, convexity and
  /// separable-zero audits. Continuity audits use kContinuityThreshold and
  /// the constant estimate uses kConstantTolerance.
  double tolerance = 1e-9;
};

/// Largest spread of E / S_vN accepted as "E = c S_vN".
inline constexpr double kConstantTolerance = 1e-8;
/// States with less reduced entropy than this (nats) are skipped when
/// estimating the constant.
inline constexpr double kEntropyFloor = 0.05;

// Pure-state postulates.
AxiomReport audit_P1_continuity(const EntanglementMeasure& m, const AuditOptions& opt = {});
AxiomReport audit_P2(const EntanglementMeasure& m, const AuditOptions& opt = {});
AxiomReport audit_P3(const EntanglementMeasure& m, const AuditOptions& opt = {});
/// Additivity over Schmidt-orthogonal superpositions. For measures with a
/// mixed evaluator the projector form is checked on the same samples and the
/// larger gap is reported.
AxiomReport audit_P4(const EntanglementMeasure& m, const AuditOptions& opt = {});

// Mixed-state postulates; not applicable without a mixed evaluator.
AxiomReport audit_M1(const EntanglementMeasure& m, const AuditOptions& opt = {});
AxiomReport audit_M2(const EntanglementMeasure& m, const AuditOptions& opt = {});
AxiomReport audit_M3(const EntanglementMeasure& m, const AuditOptions& opt = {});
AxiomReport audit_M4(const EntanglementMeasure& m, const AuditOptions& opt = {});
AxiomReport audit_M5(const EntanglementMeasure& m, const AuditOptions& opt = {});

/// E < tolerance on product pure states.
AxiomReport audit_L4(const EntanglementMeasure& m, const AuditOptions& opt = {});
/// E < tolerance on separable mixed states (qubit pairs). The classically
/// correlated state diag(1/2, 0, 0, 1/2) is always the first probe.
AxiomReport audit_L7(const EntanglementMeasure& m, const AuditOptions& opt = {});
/// L4, then L7 when the measure has a mixed evaluator.
std::vector<AxiomReport> check_separable_zero(const EntanglementMeasure& m, const AuditOptions& opt = {});

struct ConstantEstimate {
  double c_mean = 0.0;
  double c_max_deviation = 0.0;
  std::size_t samples = 0;               // states used
  std::size_t excluded_low_entropy = 0;  // states below kEntropyFloor
};

/// Mean and spread of E / S_vN over random pure states. Throws
/// std::runtime_error when every sample falls below the entropy floor.
ConstantEstimate estimate_constant(const EntanglementMeasure& m, const AuditOptions& opt = {});
/// estimate_constant as a report: violation = c_max_deviation against
/// kConstantTolerance.
AxiomReport audit_PROP6(const EntanglementMeasure& m, const AuditOptions& opt = {});

/// Any of P1-P4, M1-M5, L4, L7, PROP6.
AxiomReport run_audit(Axiom axiom, const EntanglementMeasure& m, const AuditOptions& opt = {});

struct EquationSides {
  double lhs;
  double rhs;
  double gap() const;
};

/// E(sum lambda_i psi_i) against E(|lambda_1|^2, ...) + sum |lambda_i|^2 E(psi_i).
EquationSides p4_sides(const EntanglementMeasure& m, std::span<const StateVector> components,
                       const AmplitudeDistribution& lambda);
/// The same identity evaluated on projectors with the mixed evaluator.
EquationSides m4_sides(const EntanglementMeasure& m, std::span<const StateVector> components,
                       const AmplitudeDistribution& lambda);
/// max(0, E(eta sigma + (1-eta) tau) - eta E(sigma) - (1-eta) E(tau))
double m5_violation(const EntanglementMeasure& m, const DensityOperator& sigma,
                    const DensityOperator& tau, double eta);

enum class DemoKind { p4_violation, m5_violation, trace_asymmetry };
std::optional<DemoKind> parse_demo(std::string_view name);
std::string_view demo_name(DemoKind kind);

/// Fixed, sampling-free exhibits:
///  p4-violation     gamma measure on Bell_01 + Bell_23 with amplitudes 1/sqrt(2)
///  m5-violation     reduced entropy on (|00><00| + |11><11|)/2
///  trace-asymmetry  reduced entropies of (|00><00| + |01><01|)/2 on each side
AxiomReport demo(DemoKind kind);
/// The measure a demo evaluates.
EntanglementMeasure demo_measure(DemoKind kind);

/// Recomputes a report's violation from its witness alone.
double replay_violation(const EntanglementMeasure& m, const AxiomReport& report);

}  // namespace entaudit
