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
#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entaudit/axioms.hpp"
#include "entaudit/entropy.hpp"
#include "entaudit/measures.hpp"
#include "entaudit/report.hpp"
#include "entaudit/schmidt.hpp"
#include "entaudit/serialize.hpp"
#include "entaudit/states.hpp"

namespace entaudit::cli {

using nlohmann::json;

namespace {

// A configuration or input problem; reported as one line naming the field.
struct InputError : std::runtime_error {
  InputError(const std::string& field, const std::string& problem)
      : std::runtime_error(field + ": " + problem) {}
};

std::string fmt10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw InputError(field, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(field, std::string("malformed JSON: ") + e.what());
  }
}

void write_json(const json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("out", "cannot write '" + path + "'");
  file << text;
}

EntanglementMeasure lookup_measure(const std::string& name) {
  auto found = MeasureRegistry::with_builtins().find(name);
  if (!found) throw InputError("measure", "unknown measure '" + name + "'");
  return *found;
}

std::vector<Axiom> parse_axiom_list(const std::string& list) {
  std::vector<Axiom> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto axiom = parse_axiom(item);
    if (!axiom || static_cast<int>(*axiom) > static_cast<int>(Axiom::PROP6)) {
      throw InputError("axioms", "unknown axiom '" + item + "'");
    }
    out.push_back(*axiom);
  }
  if (out.empty()) throw InputError("axioms", "empty list");
  return out;
}

json envelope(const std::string& measure, const std::vector<AxiomReport>& reports) {
  json list = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (!r.applicable) ++skipped;
    else if (r.passed) ++passed;
    else ++failed;
  }
  return json{{"measure", measure},
              {"reports", std::move(list)},
              {"summary", {{"passed", passed}, {"failed", failed}, {"not_applicable", skipped}}}};
}

void print_report_line(const AxiomReport& r, std::ostream& out) {
  out << axiom_name(r.axiom) << ": ";
  if (!r.applicable) {
    out << "not applicable (" << r.note << ")\n";
    return;
  }
  out << (r.passed ? "passed" : "FAILED") << "  worst_violation=" << fmt10(r.worst_violation)
      << "  tolerance=" << fmt10(r.tolerance) << "  samples=" << r.samples_run << "\n";
}

bool any_failed(const std::vector<AxiomReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.applicable && !r.passed; });
}

// A report file given to `compute` selects its first failing report, or the
// first report when every check passed.
std::optional<AxiomReport> report_in(const json& doc) {
  if (doc.is_object() && doc.contains("axiom")) return report_from_json(doc);
  if (doc.is_object() && doc.contains("reports")) {
    const auto& reports = doc.at("reports");
    if (!reports.is_array() || reports.empty()) throw InputError("reports", "expected a non-empty array");
    for (const auto& r : reports) {
      if (!r.value("passed", true)) return report_from_json(r);
    }
    return report_from_json(reports.front());
  }
  return std::nullopt;
}

int do_compute(const std::string& measure_name, const std::string& path, LogBase base, std::ostream& out) {
  const auto m = lookup_measure(measure_name);
  const json doc = read_json_file(path, "state");
  if (auto report = report_in(doc)) {
    const double v = replay_violation(m, *report);
    out << axiom_name(report->axiom) << " witness violation: " << fmt10(v) << "\n";
    return kOk;
  }
  const auto state = state_from_json(doc);
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    out << fmt10(to_base(evaluate_pure(m, *psi), base)) << "\n";
    const auto form = schmidt_decompose(*psi);
    out << "schmidt coefficients:";
    for (double p : form.coefficients) out << " " << fmt10(p);
    out << "\n";
    return kOk;
  }
  if (!m.has_mixed()) throw InputError("measure", "'" + m.name + "' has no mixed-state evaluator");
  out << fmt10(to_base(evaluate_mixed(m, std::get<DensityOperator>(state)), base)) << "\n";
  return kOk;
}

int do_audit(const std::string& measure_name, const std::string& axiom_list, std::size_t samples,
             std::uint64_t seed, double tol, const std::string& out_path, std::ostream& out) {
  // Names are checked before any computation starts.
  const auto m = lookup_measure(measure_name);
  const auto axioms = parse_axiom_list(axiom_list);
  AuditOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.tolerance = tol;
  std::vector<AxiomReport> reports;
  for (Axiom a : axioms) {
    try {
      reports.push_back(run_audit(a, m, opt));
    } catch (const std::runtime_error& e) {
      throw InputError("samples", e.what());
    }
  }
  write_json(envelope(measure_name, reports), out_path, out);
  if (!out_path.empty()) {
    for (const auto& r : reports) print_report_line(r, out);
  }
  return any_failed(reports) ? kAuditFailed : kOk;
}

int do_demo(const std::string& kind_name, const std::string& out_path, std::ostream& out) {
  const auto kind = parse_demo(kind_name);
  if (!kind) throw InputError("demo", "unknown demonstration '" + kind_name + "'");
  const auto report = demo(*kind);
  const auto& w = report.witness;
  out << kind_name << " (" << w.at("measure").get<std::string>() << ")\n";
  if (w.contains("lhs")) {
    out << "  lhs=" << fmt10(w.at("lhs").get<double>()) << "  rhs=" << fmt10(w.at("rhs").get<double>()) << "\n";
  }
  if (w.contains("traced_second")) {
    out << "  traced_second=" << fmt10(w.at("traced_second").get<double>())
        << "  traced_first=" << fmt10(w.at("traced_first").get<double>()) << "\n";
  }
  if (w.contains("mixed_value")) {
    out << "  mixed_value=" << fmt10(w.at("mixed_value").get<double>())
        << "  bound=" << fmt10(w.at("bound").get<double>()) << "\n";
  }
  print_report_line(report, out);
  if (!out_path.empty()) write_json(envelope(demo_measure(*kind).name, {report}), out_path, out);
  return report.passed ? kOk : kAuditFailed;
}

int do_gen(std::size_t d1, std::size_t d2, const std::string& kind, std::uint64_t seed,
           const std::string& out_path, std::ostream& out) {
  if (d1 == 0) throw InputError("d1", "must be positive");
  if (d2 == 0) throw InputError("d2", "must be positive");
  if (d1 * d2 > kMaxDimension) throw InputError("d2", "d1*d2 exceeds " + std::to_string(kMaxDimension));
  Rng rng(seed);
  json doc;
  if (kind == "pure") {
    doc = to_json(random_pure_state(d1, d2, rng));
  } else if (kind == "separable") {
    doc = to_json(build_separable(random_separable_decomposition(d1, d2, 5, rng)));
  } else {
    throw InputError("kind", "expected 'pure' or 'separable', got '" + kind + "'");
  }
  write_json(doc, out_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement measure computation and axiom audits", "entaudit"};
  app.require_subcommand(1);

  std::string measure, state_path, base_name = "nat";
  auto* compute = app.add_subcommand("compute", "Evaluate a measure on a state file");
  compute->add_option("--measure", measure, "svn, svn-scaled:<c>, gamma, shannon-schmidt")->required();
  compute->add_option("--state", state_path, "State JSON, or a report whose witness is replayed")->required();
  compute->add_option("--base", base_name, "nat or bit (display only)");

  std::string axiom_list, out_path;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  auto* audit = app.add_subcommand("audit", "Audit a measure against the listed axioms");
  audit->add_option("--measure", measure)->required();
  audit->add_option("--axioms", axiom_list, "Comma-separated, e.g. P2,P3,P4")->required();
  audit->add_option("--samples", samples);
  audit->add_option("--seed", seed);
  audit->add_option("--tol", tol);
  audit->add_option("--out", out_path, "Report file (stdout when omitted)");

  std::string demo_kind;
  auto* demo_cmd = app.add_subcommand("demo", "Run a fixed counterexample");
  demo_cmd->add_option("kind", demo_kind, "p4-violation, m5-violation or trace-asymmetry")->required();
  demo_cmd->add_option("--out", out_path);

  std::size_t d1 = 0, d2 = 0;
  std::string gen_kind = "pure";
  auto* gen = app.add_subcommand("gen", "Write a random state file");
  gen->add_option("--d1", d1)->required();
  gen->add_option("--d2", d2)->required();
  gen->add_option("--kind", gen_kind, "pure or separable");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "entaudit: error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*compute) {
      LogBase base;
      if (base_name == "nat") base = LogBase::nat;
      else if (base_name == "bit") base = LogBase::bit;
      else throw InputError("base", "expected 'nat' or 'bit', got '" + base_name + "'");
      return do_compute(measure, state_path, base, out);
    }
    if (*audit) {
      if (samples < 1) throw InputError("samples", "must be at least 1");
      if (!(tol > 0.0)) throw InputError("tol", "must be positive");
      return do_audit(measure, axiom_list, samples, seed, tol, out_path, out);
    }
    if (*demo_cmd) return do_demo(demo_kind, out_path, out);
    return do_gen(d1, d2, gen_kind, seed, out_path, out);
  } catch (const InputError& e) {
    err << "entaudit: error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "entaudit: error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "entaudit: error: input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "entaudit: error: input: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "entaudit: error: dimension: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace entaudit::cli
