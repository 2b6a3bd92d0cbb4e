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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entaudit/axioms.hpp"
#include "entaudit/entropy.hpp"
#include "entaudit/measures.hpp"
#include "entaudit/random.hpp"
#include "entaudit/schmidt.hpp"
#include "entaudit/serialize.hpp"
#include "entaudit/states.hpp"
#include "support/oracles.hpp"
#include "support/test_measures.hpp"

#ifndef ENTAUDIT_CLI_PATH
#error "ENTAUDIT_CLI_PATH must name the entaudit executable"
#endif

namespace {

using namespace entaudit;
using std::numbers::ln2;
namespace fs = std::filesystem;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

AuditOptions options(std::uint64_t seed, std::size_t samples) {
  AuditOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.tolerance = 1e-9;
  return opt;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + ENTAUDIT_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void bell_pipeline(Outcome& o) {
  const double a = 1.0 / std::numbers::sqrt2;
  const StateVector bell(2, 2, {a, 0, 0, a});
  const auto coeffs = schmidt_decompose(bell).coefficients;
  o.require(coeffs.size() == 2 && std::abs(coeffs[0] - 0.5) <= 1e-12 && std::abs(coeffs[1] - 0.5) <= 1e-12,
            "coefficients (1/2, 1/2)");
  o.require(std::abs(svn_pure(bell) - ln2) <= 1e-12, "svn = ln 2");
  o.require(std::abs(gamma_norm_pure(bell) - 2.0) <= 1e-12, "gamma norm = 2");
  o.detail << "coefficients=(" << fmt(coeffs[0]) << ", " << fmt(coeffs.size() > 1 ? coeffs[1] : 0.0)
           << ") svn=" << fmt(svn_pure(bell)) << " gamma_norm=" << fmt(gamma_norm_pure(bell));
}

void reduced_spectrum(Outcome& o) {
  Rng rng(2);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d1 = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto d2 = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto psi = random_pure_state(d1, d2, rng);
    const auto p = schmidt_decompose(psi).coefficients;
    const auto rho = projector(psi).matrix();
    for (Subsystem side : {Subsystem::first, Subsystem::second}) {
      const auto ev = hermitian_eigensystem(partial_trace(rho, d1, d2, side)).eigenvalues;
      worst = std::max(worst, testing::multiset_distance(p, ev));
    }
  }
  o.require(worst <= 1e-10, "max deviation <= 1e-10");
  o.detail << "300 states, max |schmidt - reduced eigenvalue| = " << fmt(worst);
}

void pure_postulates(Outcome& o) {
  const auto m = svn_measure();
  double worst_exact = 0.0, worst_continuity = 0.0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (Axiom a : {Axiom::P1, Axiom::P2, Axiom::P3, Axiom::P4}) {
      const auto r = run_audit(a, m, options(seed, 200));
      o.require(r.passed && r.samples_run == 200,
                std::string(axiom_name(a)) + " seed " + std::to_string(seed));
      (a == Axiom::P1 ? worst_continuity : worst_exact) =
          std::max(a == Axiom::P1 ? worst_continuity : worst_exact, r.worst_violation);
    }
  }
  o.detail << "P2-P4 worst=" << fmt(worst_exact) << " (tol 1e-9), P1 modulus at 1e-4=" << fmt(worst_continuity)
           << " (threshold 1e-3)";
}

void separable_zero(Outcome& o) {
  const auto m = svn_measure();
  const auto reports = check_separable_zero(m, options(4, 200));
  const auto& l4 = reports.at(0);
  const auto& l7 = reports.at(1);
  o.require(l4.passed && l4.worst_violation < 1e-9 && l4.samples_run == 200, "product states vanish");
  o.require(!l7.passed, "naive mixed functional fails L7");
  const double value = l7.witness.at("value").get<double>();
  o.require(std::abs(value - ln2) <= 1e-9, "L7 witness value ln 2");
  o.detail << "max product-state value=" << fmt(l4.worst_violation) << ", L7 witness value=" << fmt(value)
           << " (expected failure)";
}

void cross_norm_demo(Outcome& o) {
  const auto dir = fs::temp_directory_path() / "entaudit_acceptance_demo";
  fs::create_directories(dir);
  const auto out = dir / "p4.json";
  const int code = run_cli("demo p4-violation --out \"" + out.string() + "\"");
  o.require(code == 1, "exit code 1");
  double lhs = 0, rhs = 0, violation = 0;
  try {
    const auto doc = nlohmann::json::parse(slurp(out));
    const auto& report = doc.at("reports").at(0);
    lhs = report.at("witness").at("lhs").get<double>();
    rhs = report.at("witness").at("rhs").get<double>();
    violation = report.at("worst_violation").get<double>();
  } catch (const std::exception& e) {
    o.require(false, std::string("report readable: ") + e.what());
  }
  o.require(std::abs(lhs - 4 * std::log(4.0)) <= 1e-9, "LHS = 4 ln 4");
  o.require(std::abs(rhs - 4 * ln2) <= 1e-9, "RHS = 4 ln 2");
  o.require(std::abs(violation - 2.772588722) <= 1e-9, "violation 4 ln 2");
  o.detail << "exit=" << code << " lhs=" << fmt(lhs) << " rhs=" << fmt(rhs) << " violation=" << fmt(violation);
  fs::remove_all(dir);
}

void constant_estimation(Outcome& o) {
  for (double c : {0.5, 1.0, 2.5}) {
    const auto est = estimate_constant(svn_measure(c), options(6, 300));
    o.require(std::abs(est.c_mean - c) <= 1e-8 && est.c_max_deviation < 1e-8, "svn-scaled:" + fmt(c));
    o.detail << "c=" << fmt(c) << ": mean=" << fmt(est.c_mean) << " dev=" << fmt(est.c_max_deviation) << "; ";
  }
  const auto gamma = estimate_constant(gamma_measure(), options(6, 300));
  o.require(gamma.c_max_deviation > 0.1, "gamma flagged inconsistent");
  o.detail << "gamma dev=" << fmt(gamma.c_max_deviation);
}

void khinchin(Outcome& o) {
  for (const auto& r : audit_khinchin(shannon_functional())) {
    o.require(r.passed, "shannon " + std::string(axiom_name(r.axiom)));
  }
  const auto renyi = audit_khinchin(testing::renyi2_functional());
  const auto& rec = renyi.at(3);
  o.require(rec.axiom == Axiom::KF_RECURSION && !rec.passed, "Renyi-2 fails recursion");
  const auto& probe = rec.witness.at("canonical_probe");
  const double lhs = probe.at("lhs").get<double>();
  const double rhs = probe.at("rhs").get<double>();
  const double gap = probe.at("gap").get<double>();
  o.require(std::abs(lhs - 0.98083) <= 1e-4 && std::abs(rhs - 1.03972) <= 1e-4, "probe sides");
  o.require(std::abs(gap - std::abs(0.98083 - 1.03972)) <= 1e-4, "probe gap 0.0589");
  o.detail << "shannon: 4/4 pass; renyi-2 probe |" << fmt(lhs) << " - " << fmt(rhs) << "| = " << fmt(gap)
           << ", worst sampled gap=" << fmt(rec.worst_violation);
}

void m5_exhibit(Outcome& o) {
  const auto m = svn_measure();
  const auto r = audit_M5(m, options(8, 200));
  o.require(r.worst_violation >= ln2 - 1e-9, "violation >= ln 2");
  const auto sigma = density_from_json(r.witness.at("sigma"));
  const auto tau = density_from_json(r.witness.at("tau"));
  const double replay = m5_violation(m, sigma, tau, r.witness.at("eta").get<double>());
  o.require(replay == r.worst_violation, "witness reproduces exactly");
  o.detail << "worst=" << fmt(r.worst_violation) << " replay=" << fmt(replay);
}

void determinism(Outcome& o) {
  const auto dir = fs::temp_directory_path() / "entaudit_acceptance_determinism";
  fs::create_directories(dir);
  const std::string args = "audit --measure svn --axioms P2,P3,P4 --samples 200 --seed 42 --out ";
  const int first = run_cli(args + "\"" + (dir / "a.json").string() + "\"");
  const int second = run_cli(args + "\"" + (dir / "b.json").string() + "\"");
  const auto a = slurp(dir / "a.json");
  const auto b = slurp(dir / "b.json");
  o.require(first == 0 && second == 0, "both runs exit 0");
  o.require(!a.empty() && a == b, "byte-identical reports");
  o.detail << "exit codes " << first << "/" << second << ", " << a.size() << " bytes, identical=" << (a == b);
  fs::remove_all(dir);
}

void recursion_cascade(Outcome& o) {
  const auto m = svn_measure();
  Rng rng(10);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const auto p = random_distribution(n, rng);
    const double eta = rng.uniform();
    std::vector<double> split(p.weights().begin(), p.weights().end());
    const double last = split.back();
    split.back() = eta * last;
    split.push_back((1.0 - eta) * last);
    const double lhs = schmidt_profile_value(m, ProbabilityDistribution::normalized(split));
    const double rhs = schmidt_profile_value(m, p) +
                       last * schmidt_profile_value(m, ProbabilityDistribution::normalized({eta, 1.0 - eta}));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  o.require(worst <= 1e-9, "split identity within 1e-9");
  o.detail << "100 splits, max gap=" << fmt(worst);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"Bell-state pipeline", bell_pipeline},
      {"Reduced-spectrum oracle", reduced_spectrum},
      {"Pure-state postulates P1-P4 on svn", pure_postulates},
      {"Separable states vanish / naive L7 failure", separable_zero},
      {"Cross-norm P4 counterexample via CLI", cross_norm_demo},
      {"Constant estimation", constant_estimation},
      {"Khinchin-Faddeev suite", khinchin},
      {"M5 exhibit", m5_exhibit},
      {"CLI determinism", determinism},
      {"Recursion cascade through profile values", recursion_cascade},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << ": "
              << o.detail.str() << "\n";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in " << fmt(seconds)
            << " s\n";
  return failures == 0 ? 0 : 1;
}
