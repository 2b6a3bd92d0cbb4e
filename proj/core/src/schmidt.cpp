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
#include "entaudit/schmidt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entaudit {

ComplexVector SchmidtForm::reconstruct() const {
  if (coefficients.empty()) return {};
  ComplexVector out(left_basis.front().size() * right_basis.front().size());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const ComplexVector term = kron(left_basis[k], right_basis[k]);
    const double weight = std::sqrt(coefficients[k]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += weight * term[i];
  }
  return out;
}

SchmidtForm schmidt_decompose(const StateVector& psi) {
  // A(i, j) = psi[i*d2+j] = sum_k s_k u_k(i) conj(v_k(j)), so a_k = u_k and
  // b_k = conj(v_k).
  const auto dec = svd(psi.amplitude_matrix());
  SchmidtForm form;
  for (std::size_t k = 0; k < dec.values.size(); ++k) {
    const double p = dec.values[k] * dec.values[k];
    if (p <= kSchmidtCutoff) continue;
    form.coefficients.push_back(p);
    form.left_basis.push_back(dec.u.column_vector(k));
    ComplexVector b = dec.v.column_vector(k);
    for (auto& z : b) z = std::conj(z);
    form.right_basis.push_back(std::move(b));
  }
  return form;
}

std::size_t schmidt_rank(const StateVector& psi) { return schmidt_decompose(psi).count(); }

SchmidtSubspace schmidt_subspace(const StateVector& psi) {
  auto form = schmidt_decompose(psi);
  SchmidtSubspace sub;
  for (std::size_t k = 0; k < form.count(); ++k) {
    sub.product_basis.emplace_back(std::move(form.left_basis[k]), std::move(form.right_basis[k]));
  }
  return sub;
}

bool schmidt_orthogonal(const StateVector& psi, const StateVector& phi) {
  if (psi.d1() != phi.d1() || psi.d2() != phi.d2()) {
    throw std::invalid_argument("schmidt_orthogonal: dimension mismatch");
  }
  const auto m_psi = schmidt_subspace(psi);
  const auto m_phi = schmidt_subspace(phi);
  for (const auto& [a, b] : m_psi.product_basis) {
    for (const auto& [c, d] : m_phi.product_basis) {
      // <a (x) b, c (x) d> = <a, c> <b, d>
      if (std::abs(inner(a, c) * inner(b, d)) >= kSchmidtOrthogonalityTol) return false;
    }
  }
  return true;
}

StateVector superpose(std::span<const StateVector> states, const AmplitudeDistribution& amplitudes) {
  if (states.empty() || states.size() != amplitudes.size()) {
    throw std::invalid_argument("superpose: states and amplitudes differ in length");
  }
  const std::size_t d1 = states.front().d1();
  const std::size_t d2 = states.front().d2();
  for (const auto& s : states) {
    if (s.d1() != d1 || s.d2() != d2) throw std::invalid_argument("superpose: dimension mismatch");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (!schmidt_orthogonal(states[i], states[j])) {
        throw std::invalid_argument("superpose: states " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not Schmidt orthogonal");
      }
    }
  }
  ComplexVector sum(d1 * d2);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += amplitudes[i] * states[i][k];
  }
  const double len = norm(sum);
  if (std::abs(len - 1.0) > kStateTol) {
    throw std::logic_error("superpose: norm " + std::to_string(len) +
                           " of a Schmidt-orthogonal superposition is not 1");
  }
  return StateVector(d1, d2, std::move(sum));
}

}  // namespace entaudit
