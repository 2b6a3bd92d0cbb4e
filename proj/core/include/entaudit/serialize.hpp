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

#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "entaudit/linalg.hpp"
#include "entaudit/states.hpp"

namespace entaudit {

// State documents:
//   {"kind":"pure","d1":2,"d2":2,"amplitudes":[[re,im],...]}    index i*d2+j
//   {"kind":"mixed","d1":2,"d2":2,"matrix":[[[re,im],...],...]}  row-major
// Unknown keys are ignored, so audit witnesses double as state files.

/// Malformed document. what() names the offending field.
class FormatError : public std::invalid_argument {
 public:
  FormatError(const std::string& field, const std::string& problem)
      : std::invalid_argument(field + ": " + problem), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

using ParsedState = std::variant<StateVector, DensityOperator>;

nlohmann::json to_json(Complex z);
nlohmann::json to_json(std::span<const Complex> v);
nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const StateVector& psi);
nlohmann::json to_json(const DensityOperator& rho);

ComplexVector vector_from_json(const nlohmann::json& j, const std::string& field);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& field);
StateVector pure_state_from_json(const nlohmann::json& j);
DensityOperator density_from_json(const nlohmann::json& j);
ParsedState state_from_json(const nlohmann::json& j);

}  // namespace entaudit
