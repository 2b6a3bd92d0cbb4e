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
#include <span>
#include <utility>
#include <vector>

#include "entaudit/linalg.hpp"
#include "entaudit/states.hpp"

namespace entaudit {

/// Schmidt coefficients at or below this are treated as zero.
inline constexpr double kSchmidtCutoff = 1e-12;
/// Two product vectors with overlap modulus below this count as orthogonal.
inline constexpr double kSchmidtOrthogonalityTol = 1e-8;

/// psi = sum_k sqrt(p_k) a_k (x) b_k, restricted to p_k > kSchmidtCutoff.
///
/// When coefficients are degenerate the individual basis vectors are not
/// unique; only the coefficients and the spanned product subspace are
/// meaningful.
struct SchmidtForm {
  std::vector<double> coefficients;  // descending
  std::vector<ComplexVector> left_basis;
  std::vector<ComplexVector> right_basis;

  std::size_t count() const { return coefficients.size(); }
  /// sum_k sqrt(p_k) a_k (x) b_k
  ComplexVector reconstruct() const;
};

/// Spanning product pairs (a_k, b_k) of M(psi).
struct SchmidtSubspace {
  std::vector<std::pair<ComplexVector, ComplexVector>> product_basis;

  std::size_t dimension() const { return product_basis.size(); }
};

SchmidtForm schmidt_decompose(const StateVector& psi);
std::size_t schmidt_rank(const StateVector& psi);
SchmidtSubspace schmidt_subspace(const StateVector& psi);

/// True when every spanning product of M(psi) is orthogonal to every spanning
/// product of M(phi).
bool schmidt_orthogonal(const StateVector& psi, const StateVector& phi);

/// Normalized sum_i lambda_i psi_i of mutually Schmidt orthogonal states.
/// Throws std::invalid_argument when two inputs are not Schmidt orthogonal.
StateVector superpose(std::span<const StateVector> states, const AmplitudeDistribution& amplitudes);

}  // namespace entaudit
