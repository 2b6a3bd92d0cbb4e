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
#include "entaudit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "entaudit/continuity.hpp"
#include "entaudit/random.hpp"
#include "entaudit/schmidt.hpp"

namespace entaudit {

using nlohmann::json;

double continuity_violation(const std::array<double, 3>& moduli) {
  double growth = 0.0;
  for (std::size_t k = 1; k < moduli.size(); ++k) growth = std::max(growth, moduli[k] - moduli[k - 1]);
  if (growth > 0.0) return std::max(moduli.back(), kContinuityThreshold + growth);
  return moduli.back();
}

double to_base(double nats, LogBase base) {
  return base == LogBase::bit ? nats / std::numbers::ln2 : nats;
}

double entropy_of_weights(std::span<const double> weights) {
  // Summing in sorted order makes the result independent of the input order.
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  double acc = 0.0;
  for (double w : sorted) {
    const double p = std::clamp(w, 0.0, 1.0);
    if (p > 0.0) acc -= p * std::log(p);
  }
  return acc;
}

double shannon(const ProbabilityDistribution& p, LogBase base) {
  return to_base(entropy_of_weights(p.weights()), base);
}

SimplexFunctional shannon_functional() {
  return {"shannon", [](const ProbabilityDistribution& p) { return shannon(p); }};
}

double RecursionSides::gap() const { return std::abs(lhs - rhs); }

RecursionSides recursion_sides(const SimplexFunctional& s, const ProbabilityDistribution& p,
                               double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("recursion: eta outside [0, 1]");
  if (p.size() + 1 > kMaxSimplexLength) throw std::invalid_argument("recursion: distribution too long");
  const double last = p[p.size() - 1];
  std::vector<double> split(p.weights().begin(), p.weights().end() - 1);
  split.push_back(eta * last);
  split.push_back((1.0 - eta) * last);
  const double lhs = s.evaluate(ProbabilityDistribution(std::move(split)));
  const double rhs =
      s.evaluate(p) + last * s.evaluate(ProbabilityDistribution({eta, 1.0 - eta}));
  return {lhs, rhs};
}

namespace {

// Check tags keep the random streams of the four conditions disjoint.
enum : std::uint64_t { kTagContinuity = 1, kTagSymmetry = 2, kTagRecursion = 3 };

Rng stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  return Rng::substream(mix64(seed + tag), index);
}

json weights_json(std::span<const double> w) { return json(std::vector<double>(w.begin(), w.end())); }

AxiomReport audit_continuity(const SimplexFunctional& s, const KhinchinOptions& opt) {
  constexpr std::size_t kGridPoints = 1000;
  constexpr std::size_t kRandomPairs = 1000;
  const auto binary = [&](double p) {
    return s.evaluate(ProbabilityDistribution({p, 1.0 - p}));
  };

  std::size_t evaluations = 0;
  double total_defect = 0.0;
  for (std::size_t k = 0; k < kGridPoints; ++k) {
    const double v = binary(static_cast<double>(k) / (kGridPoints - 1));
    ++evaluations;
    if (!std::isfinite(v)) total_defect = std::numeric_limits<double>::infinity();
  }

  std::array<double, 3> moduli{};
  json worst_pair;
  for (std::size_t scale = 0; scale < kContinuityScales.size(); ++scale) {
    const double delta = kContinuityScales[scale];
    // Pairs stay a distance delta inside the boundary, where the binary
    // entropy's modulus of continuity behaves like delta*ln(1/delta).
    const double lo = delta;
    const double hi = 1.0 - delta;
    double best_gap = -1.0;
    double best_p = lo;
    const auto consider = [&](double p) {
      const double gap = std::abs(binary(p + delta) - binary(p));
      evaluations += 2;
      if (!(gap <= best_gap)) {
        best_gap = std::isfinite(gap) ? gap : std::numeric_limits<double>::infinity();
        best_p = p;
      }
    };

    Rng rng = stream(opt.seed, kTagContinuity, scale);
    for (std::size_t k = 0; k < kRandomPairs; ++k) consider(rng.uniform(lo, hi - delta));

    // Grid intervals are bisected towards the larger jump until no wider than
    // delta, which localizes jump discontinuities a random pair would miss.
    for (std::size_t k = 0; k + 1 < kGridPoints; ++k) {
      double a = lo + (hi - lo) * static_cast<double>(k) / (kGridPoints - 1);
      double b = lo + (hi - lo) * static_cast<double>(k + 1) / (kGridPoints - 1);
      while (b - a > delta) {
        const double mid = 0.5 * (a + b);
        const double fa = binary(a), fm = binary(mid), fb = binary(b);
        evaluations += 3;
        if (std::abs(fm - fa) >= std::abs(fb - fm)) {
          b = mid;
        } else {
          a = mid;
        }
      }
      consider(a + delta <= hi ? a : b - delta);
    }

    moduli[scale] = best_gap;
    if (scale + 1 == kContinuityScales.size()) {
      worst_pair = json{{"p", best_p}, {"p_prime", best_p + delta}, {"delta", delta},
                        {"gap", best_gap}};
    }
  }

  double violation = continuity_violation(moduli);
  if (!std::isfinite(total_defect)) violation = total_defect;
  json witness = worst_pair;
  witness["moduli"] = json(std::vector<double>(moduli.begin(), moduli.end()));
  witness["scales"] = json(std::vector<double>(kContinuityScales.begin(), kContinuityScales.end()));
  return make_report(Axiom::KF_CONTINUITY, evaluations, violation, kContinuityThreshold,
                     std::move(witness), opt.seed);
}

AxiomReport audit_normalization(const SimplexFunctional& s, const KhinchinOptions& opt) {
  const double value = s.evaluate(ProbabilityDistribution({0.5, 0.5}));
  const double violation = std::abs(value - std::numbers::ln2);
  return make_report(Axiom::KF_NORMALIZATION, 1, violation, opt.tolerance,
                     json{{"p", {0.5, 0.5}}, {"value", value}, {"expected", std::numbers::ln2}},
                     opt.seed);
}

AxiomReport audit_symmetry(const SimplexFunctional& s, const KhinchinOptions& opt) {
  double worst = 0.0;
  json witness = json::object();
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = stream(opt.seed, kTagSymmetry, i);
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, static_cast<int>(opt.max_length)));
    const auto p = random_distribution(n, rng);
    std::vector<double> permuted(p.weights().begin(), p.weights().end());
    for (std::size_t k = n - 1; k > 0; --k) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(k)));
      std::swap(permuted[k], permuted[j]);
    }
    const double base = s.evaluate(p);
    const double moved = s.evaluate(ProbabilityDistribution(permuted));
    const double violation = std::abs(moved - base);
    if (i == 0 || violation > worst) {
      worst = violation;
      witness = json{{"p", weights_json(p.weights())}, {"permuted", permuted},
                     {"value", base}, {"permuted_value", moved}, {"gap", violation}};
    }
  }
  return make_report(Axiom::KF_SYMMETRY, opt.samples, worst, opt.tolerance, std::move(witness),
                     opt.seed);
}

json recursion_witness(const ProbabilityDistribution& p, double eta, const RecursionSides& sides) {
  return json{{"p", weights_json(p.weights())}, {"eta", eta}, {"lhs", sides.lhs},
              {"rhs", sides.rhs}, {"gap", sides.gap()}};
}

AxiomReport audit_recursion(const SimplexFunctional& s, const KhinchinOptions& opt) {
  const ProbabilityDistribution canonical({0.5, 0.5});
  const auto probe = recursion_sides(s, canonical, 0.5);
  double worst = probe.gap();
  json witness = recursion_witness(canonical, 0.5, probe);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng = stream(opt.seed, kTagRecursion, i);
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, static_cast<int>(opt.max_length)));
    const auto p = random_distribution(n, rng);
    const double eta = rng.uniform();
    const auto sides = recursion_sides(s, p, eta);
    if (sides.gap() > worst) {
      worst = sides.gap();
      witness = recursion_witness(p, eta, sides);
    }
  }
  witness["canonical_probe"] = recursion_witness(canonical, 0.5, probe);
  return make_report(Axiom::KF_RECURSION, opt.samples + 1, worst, opt.tolerance,
                     std::move(witness), opt.seed);
}

}  // namespace

std::vector<AxiomReport> audit_khinchin(const SimplexFunctional& s, const KhinchinOptions& options) {
  if (options.max_length < 2 || options.max_length + 1 > kMaxSimplexLength) {
    throw std::invalid_argument("audit_khinchin: max_length must lie in [2, 63]");
  }
  return {audit_continuity(s, options), audit_normalization(s, options),
          audit_symmetry(s, options), audit_recursion(s, options)};
}

double svn_mixed(const DensityOperator& rho, Subsystem traced, LogBase base) {
  const auto reduced = partial_trace(rho.matrix(), rho.d1(), rho.d2(), traced);
  return to_base(entropy_of_weights(hermitian_eigensystem(reduced).eigenvalues), base);
}

double svn_pure(const StateVector& psi, LogBase base) {
  return to_base(entropy_of_weights(schmidt_decompose(psi).coefficients), base);
}

}  // namespace entaudit
