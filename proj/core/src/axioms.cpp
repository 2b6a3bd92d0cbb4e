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
#include "entaudit/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entaudit/continuity.hpp"
#include "entaudit/entropy.hpp"
#include "entaudit/random.hpp"
#include "entaudit/schmidt.hpp"
#include "entaudit/serialize.hpp"

namespace entaudit {

using nlohmann::json;

namespace {

// Each audit draws from its own family of per-sample streams.
enum class Stream : std::uint64_t { P1 = 101, P2, P3, P4, M1, M2, M3, M5, L4, L7, PROP6 };

Rng sample_rng(std::uint64_t seed, Stream stream, std::size_t index) {
  return Rng::substream(mix64(seed + static_cast<std::uint64_t>(stream)), index);
}

std::size_t pick(Rng& rng, int lo, int hi) { return static_cast<std::size_t>(rng.uniform_int(lo, hi)); }

double as_violation(double x) {
  return std::isnan(x) ? std::numeric_limits<double>::infinity() : std::abs(x);
}

// Keeps the first witness on ties so that fixed probes placed first win.
struct Worst {
  double value = -1.0;
  json witness = json::object();

  bool offer(double v) const { return v > value; }
  void take(double v, json w) {
    value = v;
    witness = std::move(w);
  }
  double violation() const { return std::max(value, 0.0); }
};

json with_state(json doc, const json& extra) {
  for (const auto& [key, val] : extra.items()) doc[key] = val;
  return doc;
}

json states_json(std::span<const StateVector> states) {
  json out = json::array();
  for (const auto& s : states) out.push_back(to_json(s));
  return out;
}

std::vector<StateVector> states_from_json(const json& j) {
  std::vector<StateVector> out;
  for (const auto& item : j) out.push_back(pure_state_from_json(item));
  return out;
}

// Schmidt-orthogonal family: component i is a random state supported on its
// own block of rows and columns of a (d1, d2) <= (6, 6) system.
struct SuperpositionSample {
  std::vector<StateVector> components;
  AmplitudeDistribution lambda;
};

SuperpositionSample draw_superposition(Rng& rng) {
  const std::size_t count = pick(rng, 2, 3);
  const int max_block = static_cast<int>(6 / count);
  std::vector<std::size_t> rows(count), cols(count);
  for (std::size_t i = 0; i < count; ++i) {
    rows[i] = pick(rng, 1, max_block);
    cols[i] = pick(rng, 1, max_block);
  }
  std::size_t d1 = 0, d2 = 0;
  for (std::size_t i = 0; i < count; ++i) {
    d1 += rows[i];
    d2 += cols[i];
  }
  std::vector<StateVector> components;
  std::size_t row0 = 0, col0 = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto local = random_pure_state(rows[i], cols[i], rng);
    ComplexVector amps(d1 * d2);
    for (std::size_t a = 0; a < rows[i]; ++a) {
      for (std::size_t b = 0; b < cols[i]; ++b) {
        amps[(row0 + a) * d2 + (col0 + b)] = local[a * cols[i] + b];
      }
    }
    components.emplace_back(d1, d2, std::move(amps));
    row0 += rows[i];
    col0 += cols[i];
  }
  ComplexVector lambda(count);
  for (auto& z : lambda) z = rng.complex_gaussian();
  return {std::move(components), AmplitudeDistribution::normalized(std::move(lambda))};
}

json superposition_witness(std::span<const StateVector> components, const AmplitudeDistribution& lambda,
                           const EquationSides& sides, const char* mode) {
  const auto psi = superpose(components, lambda);
  return with_state(to_json(psi), json{{"components", states_json(components)},
                                       {"lambda", to_json(lambda.amplitudes())},
                                       {"lhs", sides.lhs},
                                       {"rhs", sides.rhs},
                                       {"mode", mode}});
}

json decomposition_json(const SeparableDecomposition& dec) {
  json left = json::array(), right = json::array();
  for (const auto& f : dec.left_factors) left.push_back(to_json(f.matrix()));
  for (const auto& f : dec.right_factors) right.push_back(to_json(f.matrix()));
  return json{{"weights", std::vector<double>(dec.weights.weights().begin(), dec.weights.weights().end())},
              {"left", std::move(left)},
              {"right", std::move(right)}};
}

SeparableDecomposition classically_correlated_pair() {
  std::vector<DensityOperator> left, right;
  for (std::size_t k = 0; k < 2; ++k) {
    ComplexMatrix proj(2, 2);
    proj(k, k) = 1.0;
    left.push_back(single_system(proj));
    right.push_back(single_system(proj));
  }
  return {ProbabilityDistribution({0.5, 0.5}), std::move(left), std::move(right)};
}

json m5_witness(const EntanglementMeasure& m, const DensityOperator& sigma, const DensityOperator& tau,
                double eta) {
  const auto mixed = mix(sigma, tau, eta);
  return with_state(to_json(mixed),
                    json{{"sigma", to_json(sigma)},
                         {"tau", to_json(tau)},
                         {"eta", eta},
                         {"mixed_value", evaluate_mixed(m, mixed)},
                         {"bound", eta * evaluate_mixed(m, sigma) + (1.0 - eta) * evaluate_mixed(m, tau)}});
}

AxiomReport requires_mixed(Axiom axiom, const EntanglementMeasure& m, const AuditOptions& opt) {
  return not_applicable(axiom, opt.seed, "measure '" + m.name + "' has no mixed-state evaluator");
}

}  // namespace

double EquationSides::gap() const { return std::abs(lhs - rhs); }

EquationSides p4_sides(const EntanglementMeasure& m, std::span<const StateVector> components,
                       const AmplitudeDistribution& lambda) {
  const auto psi = superpose(components, lambda);
  const auto weights = lambda.probabilities();
  double rhs = schmidt_profile_value(m, weights);
  for (std::size_t i = 0; i < components.size(); ++i) rhs += weights[i] * evaluate_pure(m, components[i]);
  return {evaluate_pure(m, psi), rhs};
}

EquationSides m4_sides(const EntanglementMeasure& m, std::span<const StateVector> components,
                       const AmplitudeDistribution& lambda) {
  const auto psi = superpose(components, lambda);
  const auto weights = lambda.probabilities();
  double rhs = evaluate_mixed(m, projector(canonical_state(weights)));
  for (std::size_t i = 0; i < components.size(); ++i) {
    rhs += weights[i] * evaluate_mixed(m, projector(components[i]));
  }
  return {evaluate_mixed(m, projector(psi)), rhs};
}

double m5_violation(const EntanglementMeasure& m, const DensityOperator& sigma, const DensityOperator& tau,
                    double eta) {
  const double mixed = evaluate_mixed(m, mix(sigma, tau, eta));
  const double bound = eta * evaluate_mixed(m, sigma) + (1.0 - eta) * evaluate_mixed(m, tau);
  if (std::isnan(mixed) || std::isnan(bound)) return std::numeric_limits<double>::infinity();
  return std::max(0.0, mixed - bound);
}

// ---------------------------------------------------------------------------
// P1 / M1: perturbation scans.

AxiomReport audit_P1_continuity(const EntanglementMeasure& m, const AuditOptions& opt) {
  std::array<double, 3> moduli{};
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::P1, i);
    const auto d1 = pick(rng, 2, 4);
    const auto d2 = pick(rng, 2, 4);
    // Product states are included because rank-like functionals jump there.
    const auto base = i % 2 == 0 ? random_pure_state(d1, d2, rng) : random_product_state(d1, d2, rng);
    const double e0 = evaluate_pure(m, base);
    for (std::size_t k = 0; k < kContinuityScales.size(); ++k) {
      const double eps = kContinuityScales[k];
      ComplexVector direction(base.dimension());
      for (auto& z : direction) z = rng.complex_gaussian();
      const double len = norm(direction);
      ComplexVector amps(base.amplitudes().begin(), base.amplitudes().end());
      for (std::size_t j = 0; j < amps.size(); ++j) amps[j] += eps * direction[j] / len;
      const double total = norm(amps);
      for (auto& z : amps) z /= total;
      const StateVector moved(d1, d2, std::move(amps));
      const double gap = as_violation(evaluate_pure(m, moved) - e0);
      moduli[k] = std::max(moduli[k], gap);
      if (k + 1 == kContinuityScales.size() && worst.offer(gap)) {
        worst.take(gap, with_state(to_json(moved), json{{"base", to_json(base)}, {"scale", eps}, {"gap", gap}}));
      }
    }
  }
  json witness = worst.witness;
  witness["moduli"] = json(std::vector<double>(moduli.begin(), moduli.end()));
  return make_report(Axiom::P1, opt.samples, continuity_violation(moduli), kContinuityThreshold,
                     std::move(witness), opt.seed);
}

AxiomReport audit_M1(const EntanglementMeasure& m, const AuditOptions& opt) {
  if (!m.has_mixed()) return requires_mixed(Axiom::M1, m, opt);
  std::array<double, 3> moduli{};
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::M1, i);
    const auto d1 = pick(rng, 2, 3);
    const auto d2 = pick(rng, 2, 3);
    const auto base = random_density(d1, d2, pick(rng, 1, static_cast<int>(d1 * d2)), rng);
    const double e0 = evaluate_mixed(m, base);
    for (std::size_t k = 0; k < kContinuityScales.size(); ++k) {
      const double eps = kContinuityScales[k];
      // Trace-norm distance to the base is at most 2 eps.
      const auto moved = mix(projector(random_pure_state(d1, d2, rng)), base, eps);
      const double gap = as_violation(evaluate_mixed(m, moved) - e0);
      moduli[k] = std::max(moduli[k], gap);
      if (k + 1 == kContinuityScales.size() && worst.offer(gap)) {
        worst.take(gap, with_state(to_json(moved), json{{"base", to_json(base)}, {"scale", eps}, {"gap", gap}}));
      }
    }
  }
  json witness = worst.witness;
  witness["moduli"] = json(std::vector<double>(moduli.begin(), moduli.end()));
  return make_report(Axiom::M1, opt.samples, continuity_violation(moduli), kContinuityThreshold,
                     std::move(witness), opt.seed);
}

// ---------------------------------------------------------------------------
// P2 / M2: local unitary invariance.

AxiomReport audit_P2(const EntanglementMeasure& m, const AuditOptions& opt) {
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::P2, i);
    const auto d1 = pick(rng, 2, 4);
    const auto d2 = pick(rng, 2, 4);
    const auto psi = random_pure_state(d1, d2, rng);
    const auto u = random_local_unitary(d1, rng);
    const auto v = random_local_unitary(d2, rng);
    const double before = evaluate_pure(m, psi);
    const double after = evaluate_pure(m, apply_local(u, v, psi));
    const double gap = as_violation(after - before);
    if (worst.offer(gap)) {
      worst.take(gap, with_state(to_json(psi), json{{"U", to_json(u)}, {"V", to_json(v)},
                                                   {"value", before}, {"transformed_value", after}}));
    }
  }
  return make_report(Axiom::P2, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

AxiomReport audit_M2(const EntanglementMeasure& m, const AuditOptions& opt) {
  if (!m.has_mixed()) return requires_mixed(Axiom::M2, m, opt);
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::M2, i);
    const auto d1 = pick(rng, 2, 4);
    const auto d2 = pick(rng, 2, 4);
    const auto rho = random_density(d1, d2, pick(rng, 1, static_cast<int>(d1 * d2)), rng);
    const auto u = random_local_unitary(d1, rng);
    const auto v = random_local_unitary(d2, rng);
    const double before = evaluate_mixed(m, rho);
    const double after = evaluate_mixed(m, conjugate_local(u, v, rho));
    const double gap = as_violation(after - before);
    if (worst.offer(gap)) {
      worst.take(gap, with_state(to_json(rho), json{{"U", to_json(u)}, {"V", to_json(v)},
                                                   {"value", before}, {"transformed_value", after}}));
    }
  }
  return make_report(Axiom::M2, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

// ---------------------------------------------------------------------------
// P3 / M3: embedding invariance.

AxiomReport audit_P3(const EntanglementMeasure& m, const AuditOptions& opt) {
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::P3, i);
    const auto d1 = pick(rng, 1, 3);
    const auto d2 = pick(rng, 1, 3);
    const auto k = pick(rng, 1, 2);
    const auto psi = random_pure_state(d1, d2, rng);
    const double small = evaluate_pure(m, psi);
    const double big = evaluate_pure(m, embed_state(psi, d1 + k, d2 + k));
    const double gap = as_violation(big - small);
    if (worst.offer(gap)) {
      worst.take(gap, with_state(to_json(psi), json{{"embed_d1", d1 + k}, {"embed_d2", d2 + k},
                                                   {"value", small}, {"embedded_value", big}}));
    }
  }
  return make_report(Axiom::P3, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

AxiomReport audit_M3(const EntanglementMeasure& m, const AuditOptions& opt) {
  if (!m.has_mixed()) return requires_mixed(Axiom::M3, m, opt);
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::M3, i);
    const auto d1 = pick(rng, 1, 3);
    const auto d2 = pick(rng, 1, 3);
    const auto k = pick(rng, 1, 2);
    const auto rho = random_density(d1, d2, pick(rng, 1, static_cast<int>(d1 * d2)), rng);
    const double small = evaluate_mixed(m, rho);
    const double big = evaluate_mixed(m, embed_density(rho, d1 + k, d2 + k));
    const double gap = as_violation(big - small);
    if (worst.offer(gap)) {
      worst.take(gap, with_state(to_json(rho), json{{"embed_d1", d1 + k}, {"embed_d2", d2 + k},
                                                   {"value", small}, {"embedded_value", big}}));
    }
  }
  return make_report(Axiom::M3, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

// ---------------------------------------------------------------------------
// P4 / M4: additivity over Schmidt-orthogonal superpositions.

AxiomReport audit_P4(const EntanglementMeasure& m, const AuditOptions& opt) {
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::P4, i);
    const auto sample = draw_superposition(rng);
    const auto pure = p4_sides(m, sample.components, sample.lambda);
    if (worst.offer(as_violation(pure.lhs - pure.rhs))) {
      worst.take(as_violation(pure.lhs - pure.rhs),
                 superposition_witness(sample.components, sample.lambda, pure, "pure"));
    }
    if (m.has_mixed()) {
      const auto proj = m4_sides(m, sample.components, sample.lambda);
      if (worst.offer(as_violation(proj.lhs - proj.rhs))) {
        worst.take(as_violation(proj.lhs - proj.rhs),
                   superposition_witness(sample.components, sample.lambda, proj, "projector"));
      }
    }
  }
  return make_report(Axiom::P4, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

AxiomReport audit_M4(const EntanglementMeasure& m, const AuditOptions& opt) {
  if (!m.has_mixed()) return requires_mixed(Axiom::M4, m, opt);
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::P4, i);
    const auto sample = draw_superposition(rng);
    const auto proj = m4_sides(m, sample.components, sample.lambda);
    if (worst.offer(as_violation(proj.lhs - proj.rhs))) {
      worst.take(as_violation(proj.lhs - proj.rhs),
                 superposition_witness(sample.components, sample.lambda, proj, "projector"));
    }
  }
  return make_report(Axiom::M4, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

// ---------------------------------------------------------------------------
// M5: convexity.

AxiomReport audit_M5(const EntanglementMeasure& m, const AuditOptions& opt) {
  if (!m.has_mixed()) return requires_mixed(Axiom::M5, m, opt);
  Worst worst;
  {
    // Fixed probe: mixing two product states into a classically correlated one.
    const auto sigma = projector(StateVector::basis(2, 2, 0, 0));
    const auto tau = projector(StateVector::basis(2, 2, 1, 1));
    worst.take(m5_violation(m, sigma, tau, 0.5), m5_witness(m, sigma, tau, 0.5));
  }
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::M5, i);
    const auto d1 = pick(rng, 2, 3);
    const auto d2 = pick(rng, 2, 3);
    const auto sigma = random_density(d1, d2, pick(rng, 1, 3), rng);
    const auto tau = random_density(d1, d2, pick(rng, 1, 3), rng);
    const double eta = rng.uniform();
    const double v = m5_violation(m, sigma, tau, eta);
    if (worst.offer(v)) worst.take(v, m5_witness(m, sigma, tau, eta));
  }
  return make_report(Axiom::M5, opt.samples + 1, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

// ---------------------------------------------------------------------------
// Separable states carry no entanglement.

AxiomReport audit_L4(const EntanglementMeasure& m, const AuditOptions& opt) {
  Worst worst;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::L4, i);
    const auto psi = random_product_state(pick(rng, 2, 4), pick(rng, 2, 4), rng);
    const double value = evaluate_pure(m, psi);
    const double v = as_violation(value);
    if (worst.offer(v)) worst.take(v, with_state(to_json(psi), json{{"value", value}}));
  }
  return make_report(Axiom::L4, opt.samples, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

AxiomReport audit_L7(const EntanglementMeasure& m, const AuditOptions& opt) {
  if (!m.has_mixed()) return requires_mixed(Axiom::L7, m, opt);
  Worst worst;
  const auto consider = [&](const SeparableDecomposition& dec) {
    const auto rho = build_separable(dec);
    const double value = evaluate_mixed(m, rho);
    const double v = as_violation(value);
    if (worst.offer(v)) {
      worst.take(v, with_state(to_json(rho), json{{"value", value}, {"decomposition", decomposition_json(dec)}}));
    }
  };
  consider(classically_correlated_pair());
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::L7, i);
    consider(random_separable_decomposition(2, 2, 5, rng));
  }
  return make_report(Axiom::L7, opt.samples + 1, worst.violation(), opt.tolerance, worst.witness, opt.seed);
}

std::vector<AxiomReport> check_separable_zero(const EntanglementMeasure& m, const AuditOptions& opt) {
  std::vector<AxiomReport> out{audit_L4(m, opt)};
  if (m.has_mixed()) out.push_back(audit_L7(m, opt));
  return out;
}

// ---------------------------------------------------------------------------
// E = c S_vN on pure states.

namespace {

struct RatioSample {
  StateVector psi;
  double entropy;
  double ratio;
};

std::vector<RatioSample> ratio_samples(const EntanglementMeasure& m, const AuditOptions& opt,
                                       std::size_t& excluded) {
  std::vector<RatioSample> out;
  excluded = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = sample_rng(opt.seed, Stream::PROP6, i);
    auto psi = random_pure_state(pick(rng, 2, 4), pick(rng, 2, 4), rng);
    const double s = svn_pure(psi);
    if (s < kEntropyFloor) {
      ++excluded;
      continue;
    }
    const double ratio = evaluate_pure(m, psi) / s;
    out.push_back({std::move(psi), s, ratio});
  }
  if (out.empty()) throw std::runtime_error("estimate_constant: every sample is below the entropy floor");
  return out;
}

}  // namespace

ConstantEstimate estimate_constant(const EntanglementMeasure& m, const AuditOptions& opt) {
  ConstantEstimate est;
  const auto samples = ratio_samples(m, opt, est.excluded_low_entropy);
  double total = 0.0;
  for (const auto& s : samples) total += s.ratio;
  est.samples = samples.size();
  est.c_mean = total / static_cast<double>(samples.size());
  for (const auto& s : samples) est.c_max_deviation = std::max(est.c_max_deviation, as_violation(s.ratio - est.c_mean));
  return est;
}

AxiomReport audit_PROP6(const EntanglementMeasure& m, const AuditOptions& opt) {
  std::size_t excluded = 0;
  const auto samples = ratio_samples(m, opt, excluded);
  double total = 0.0;
  for (const auto& s : samples) total += s.ratio;
  const double mean = total / static_cast<double>(samples.size());
  Worst worst;
  for (const auto& s : samples) {
    const double dev = as_violation(s.ratio - mean);
    if (worst.offer(dev)) {
      worst.take(dev, with_state(to_json(s.psi), json{{"ratio", s.ratio}, {"c_mean", mean}, {"svn", s.entropy}}));
    }
  }
  auto report = make_report(Axiom::PROP6, samples.size(), worst.violation(), kConstantTolerance,
                            worst.witness, opt.seed);
  report.note = "c_mean=" + std::to_string(mean) + ", excluded_low_entropy=" + std::to_string(excluded);
  return report;
}

AxiomReport run_audit(Axiom axiom, const EntanglementMeasure& m, const AuditOptions& opt) {
  switch (axiom) {
    case Axiom::P1: return audit_P1_continuity(m, opt);
    case Axiom::P2: return audit_P2(m, opt);
    case Axiom::P3: return audit_P3(m, opt);
    case Axiom::P4: return audit_P4(m, opt);
    case Axiom::M1: return audit_M1(m, opt);
    case Axiom::M2: return audit_M2(m, opt);
    case Axiom::M3: return audit_M3(m, opt);
    case Axiom::M4: return audit_M4(m, opt);
    case Axiom::M5: return audit_M5(m, opt);
    case Axiom::L4: return audit_L4(m, opt);
    case Axiom::L7: return audit_L7(m, opt);
    case Axiom::PROP6: return audit_PROP6(m, opt);
    default: break;
  }
  throw std::invalid_argument("run_audit: " + std::string(axiom_name(axiom)) + " is not a measure audit");
}

// ---------------------------------------------------------------------------
// Demonstrations.

std::optional<DemoKind> parse_demo(std::string_view name) {
  if (name == "p4-violation") return DemoKind::p4_violation;
  if (name == "m5-violation") return DemoKind::m5_violation;
  if (name == "trace-asymmetry") return DemoKind::trace_asymmetry;
  return std::nullopt;
}

std::string_view demo_name(DemoKind kind) {
  switch (kind) {
    case DemoKind::p4_violation: return "p4-violation";
    case DemoKind::m5_violation: return "m5-violation";
    case DemoKind::trace_asymmetry: return "trace-asymmetry";
  }
  return "?";
}

EntanglementMeasure demo_measure(DemoKind kind) {
  return kind == DemoKind::p4_violation ? gamma_measure() : svn_measure();
}

AxiomReport demo(DemoKind kind) {
  constexpr double kDemoTolerance = 1e-9;
  const auto m = demo_measure(kind);
  AxiomReport report;
  switch (kind) {
    case DemoKind::p4_violation: {
      // Bell pairs on the |0>,|1> and |2>,|3> blocks of a 4 x 4 system.
      const double a = 1.0 / std::numbers::sqrt2;
      ComplexVector first(16), second(16);
      first[0] = first[5] = a;
      second[10] = second[15] = a;
      const std::vector<StateVector> components{StateVector(4, 4, first), StateVector(4, 4, second)};
      const AmplitudeDistribution lambda({a, a});
      const auto sides = p4_sides(m, components, lambda);
      report = make_report(Axiom::P4, 1, sides.gap(), kDemoTolerance,
                           superposition_witness(components, lambda, sides, "pure"), 0);
      break;
    }
    case DemoKind::m5_violation: {
      const auto sigma = projector(StateVector::basis(2, 2, 0, 0));
      const auto tau = projector(StateVector::basis(2, 2, 1, 1));
      report = make_report(Axiom::M5, 1, m5_violation(m, sigma, tau, 0.5), kDemoTolerance,
                           m5_witness(m, sigma, tau, 0.5), 0);
      break;
    }
    case DemoKind::trace_asymmetry: {
      const auto rho = mix(projector(StateVector::basis(2, 2, 0, 0)),
                           projector(StateVector::basis(2, 2, 0, 1)), 0.5);
      const double keep_first = svn_mixed(rho, Subsystem::second);
      const double keep_second = svn_mixed(rho, Subsystem::first);
      report = make_report(Axiom::TRACE_ASYMMETRY, 1, std::abs(keep_first - keep_second), kDemoTolerance,
                           with_state(to_json(rho), json{{"traced_second", keep_first},
                                                         {"traced_first", keep_second}}),
                           0);
      break;
    }
  }
  report.witness["measure"] = m.name;
  report.note = std::string(demo_name(kind));
  return report;
}

// ---------------------------------------------------------------------------

double replay_violation(const EntanglementMeasure& m, const AxiomReport& report) {
  const json& w = report.witness;
  if (!report.applicable) return 0.0;
  switch (report.axiom) {
    case Axiom::P1: {
      const auto base = pure_state_from_json(w.at("base"));
      return as_violation(evaluate_pure(m, pure_state_from_json(w)) - evaluate_pure(m, base));
    }
    case Axiom::M1: {
      const auto base = density_from_json(w.at("base"));
      return as_violation(evaluate_mixed(m, density_from_json(w)) - evaluate_mixed(m, base));
    }
    case Axiom::P2: {
      const auto psi = pure_state_from_json(w);
      const auto u = matrix_from_json(w.at("U"), "U");
      const auto v = matrix_from_json(w.at("V"), "V");
      return as_violation(evaluate_pure(m, apply_local(u, v, psi)) - evaluate_pure(m, psi));
    }
    case Axiom::M2: {
      const auto rho = density_from_json(w);
      const auto u = matrix_from_json(w.at("U"), "U");
      const auto v = matrix_from_json(w.at("V"), "V");
      return as_violation(evaluate_mixed(m, conjugate_local(u, v, rho)) - evaluate_mixed(m, rho));
    }
    case Axiom::P3: {
      const auto psi = pure_state_from_json(w);
      const auto big = embed_state(psi, w.at("embed_d1").get<std::size_t>(), w.at("embed_d2").get<std::size_t>());
      return as_violation(evaluate_pure(m, big) - evaluate_pure(m, psi));
    }
    case Axiom::M3: {
      const auto rho = density_from_json(w);
      const auto big = embed_density(rho, w.at("embed_d1").get<std::size_t>(), w.at("embed_d2").get<std::size_t>());
      return as_violation(evaluate_mixed(m, big) - evaluate_mixed(m, rho));
    }
    case Axiom::P4:
    case Axiom::M4: {
      const auto components = states_from_json(w.at("components"));
      const AmplitudeDistribution lambda(vector_from_json(w.at("lambda"), "lambda"));
      const auto sides = w.at("mode") == "projector" ? m4_sides(m, components, lambda)
                                                      : p4_sides(m, components, lambda);
      return as_violation(sides.lhs - sides.rhs);
    }
    case Axiom::M5:
      return m5_violation(m, density_from_json(w.at("sigma")), density_from_json(w.at("tau")),
                          w.at("eta").get<double>());
    case Axiom::L4:
      return as_violation(evaluate_pure(m, pure_state_from_json(w)));
    case Axiom::L7:
      return as_violation(evaluate_mixed(m, density_from_json(w)));
    case Axiom::PROP6: {
      const auto psi = pure_state_from_json(w);
      return as_violation(evaluate_pure(m, psi) / svn_pure(psi) - w.at("c_mean").get<double>());
    }
    case Axiom::TRACE_ASYMMETRY: {
      const auto rho = density_from_json(w);
      return std::abs(svn_mixed(rho, Subsystem::second) - svn_mixed(rho, Subsystem::first));
    }
    default: break;
  }
  throw std::invalid_argument("replay_violation: no replay for " + std::string(axiom_name(report.axiom)));
}

}  // namespace entaudit
