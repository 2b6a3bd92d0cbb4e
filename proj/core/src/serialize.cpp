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
#include "entaudit/serialize.hpp"

#include <cstddef>

namespace entaudit {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError(field, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::size_t dimension_from_json(const json& j, const char* field) {
  if (!j.contains(field)) throw FormatError(field, "missing");
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw FormatError(field, "expected a positive integer");
  }
  return v.get<std::size_t>();
}

template <class Fn>
auto rethrow_as_format_error(const std::string& field, Fn&& fn) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(field, e.what());
  }
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const StateVector& psi) {
  return json{{"kind", "pure"}, {"d1", psi.d1()}, {"d2", psi.d2()},
              {"amplitudes", to_json(psi.amplitudes())}};
}

json to_json(const DensityOperator& rho) {
  return json{{"kind", "mixed"}, {"d1", rho.d1()}, {"d2", rho.d2()},
              {"matrix", to_json(rho.matrix())}};
}

ComplexVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw FormatError(field, "expected an array");
  ComplexVector out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(complex_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw FormatError(field, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Complex> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = vector_from_json(j[i], field + "[" + std::to_string(i) + "]");
    if (i == 0) cols = row.size();
    if (row.size() != cols || cols == 0) throw FormatError(field, "rows have unequal length");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return rethrow_as_format_error(field, [&] { return ComplexMatrix(rows, cols, std::move(entries)); });
}

StateVector pure_state_from_json(const json& j) {
  const auto d1 = dimension_from_json(j, "d1");
  const auto d2 = dimension_from_json(j, "d2");
  if (!j.contains("amplitudes")) throw FormatError("amplitudes", "missing");
  auto amps = vector_from_json(j.at("amplitudes"), "amplitudes");
  return rethrow_as_format_error("amplitudes", [&] { return StateVector(d1, d2, std::move(amps)); });
}

DensityOperator density_from_json(const json& j) {
  const auto d1 = dimension_from_json(j, "d1");
  const auto d2 = dimension_from_json(j, "d2");
  if (!j.contains("matrix")) throw FormatError("matrix", "missing");
  auto m = matrix_from_json(j.at("matrix"), "matrix");
  return rethrow_as_format_error("matrix", [&] { return validate_density(std::move(m), d1, d2); });
}

ParsedState state_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("state", "expected a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw FormatError("kind", "missing");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "pure") return pure_state_from_json(j);
  if (kind == "mixed") return density_from_json(j);
  throw FormatError("kind", "expected \"pure\" or \"mixed\", got \"" + kind + "\"");
}

}  // namespace entaudit
