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
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "entaudit/random.hpp"
#include "entaudit/schmidt.hpp"
#include "entaudit/states.hpp"
#include "support/oracles.hpp"

namespace entaudit {
namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

StateVector pair_state(std::size_t d, std::size_t a, std::size_t b, double sign = 1.0) {
  ComplexVector amps(d * d);
  amps[a * d + a] = kInvSqrt2;
  amps[b * d + b] = sign * kInvSqrt2;
  return StateVector(d, d, std::move(amps));
}

double reconstruction_error(const StateVector& psi, const SchmidtForm& form) {
  const auto r = form.reconstruct();
  // Compare up to a global phase.
  const Complex overlap = inner(psi.amplitudes(), r);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  double err = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) err += std::norm(phase * psi[k] - r[k]);
  return std::sqrt(err);
}

TEST(SchmidtDecompose, ProductState) {
  const auto form = schmidt_decompose(StateVector::basis(2, 2, 0, 0));
  ASSERT_EQ(form.count(), 1u);
  EXPECT_NEAR(form.coefficients[0], 1.0, 1e-15);
}

TEST(SchmidtDecompose, BellState) {
  const auto form = schmidt_decompose(pair_state(2, 0, 1));
  ASSERT_EQ(form.count(), 2u);
  EXPECT_NEAR(form.coefficients[0], 0.5, 1e-12);
  EXPECT_NEAR(form.coefficients[1], 0.5, 1e-12);
}

TEST(SchmidtDecompose, UnequalDiagonalState) {
  const StateVector psi(2, 2, {std::sqrt(0.9), 0, 0, std::sqrt(0.1)});
  const auto form = schmidt_decompose(psi);
  ASSERT_EQ(form.count(), 2u);
  EXPECT_NEAR(form.coefficients[0], 0.9, 1e-12);
  EXPECT_NEAR(form.coefficients[1], 0.1, 1e-12);
}

TEST(SchmidtDecompose, ReconstructionAndOrthonormalBases) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d1 = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const auto d2 = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const auto psi = trial % 3 == 0 ? random_product_state(d1, d2, rng) : random_pure_state(d1, d2, rng);
    const auto form = schmidt_decompose(psi);
    double sum = 0.0;
    for (std::size_t k = 0; k < form.count(); ++k) {
      sum += form.coefficients[k];
      EXPECT_GT(form.coefficients[k], kSchmidtCutoff);
      if (k > 0) EXPECT_GE(form.coefficients[k - 1], form.coefficients[k]);
      for (std::size_t l = 0; l < form.count(); ++l) {
        const double expected = k == l ? 1.0 : 0.0;
        EXPECT_NEAR(std::abs(inner(form.left_basis[k], form.left_basis[l]) - expected), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(inner(form.right_basis[k], form.right_basis[l]) - expected), 0.0, 1e-10);
      }
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_LT(reconstruction_error(psi, form), 1e-9);
  }
}

TEST(SchmidtDecompose, CoefficientsMatchReducedSpectra) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d1 = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto d2 = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto psi = random_pure_state(d1, d2, rng);
    const auto p = schmidt_decompose(psi).coefficients;
    const auto rho = projector(psi).matrix();
    EXPECT_LT(testing::multiset_distance(p, testing::hermitian_eigenvalues_oracle(
                                                partial_trace(rho, d1, d2, Subsystem::second))),
              1e-10);
    EXPECT_LT(testing::multiset_distance(p, testing::hermitian_eigenvalues_oracle(
                                                partial_trace(rho, d1, d2, Subsystem::first))),
              1e-10);
  }
}

TEST(SchmidtDecompose, LocalUnitaryCovariance) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d1 = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto d2 = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const auto psi = random_pure_state(d1, d2, rng);
    const auto moved = apply_local(random_local_unitary(d1, rng), random_local_unitary(d2, rng), psi);
    EXPECT_LT(testing::multiset_distance(schmidt_decompose(psi).coefficients,
                                         schmidt_decompose(moved).coefficients),
              1e-10);
  }
}

TEST(SchmidtRank, Examples) {
  Rng rng(4);
  EXPECT_EQ(schmidt_rank(random_product_state(3, 4, rng)), 1u);
  EXPECT_EQ(schmidt_rank(pair_state(2, 0, 1)), 2u);
  EXPECT_EQ(schmidt_rank(maximally_entangled(4)), 4u);
}

TEST(SchmidtSubspace, Examples) {
  const auto basis = schmidt_subspace(StateVector::basis(2, 2, 0, 0));
  ASSERT_EQ(basis.dimension(), 1u);
  EXPECT_NEAR(std::abs(basis.product_basis[0].first[0]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(basis.product_basis[0].second[0]), 1.0, 1e-15);

  const auto bell = schmidt_subspace(pair_state(2, 0, 1));
  ASSERT_EQ(bell.dimension(), 2u);
  std::vector<double> diagonal_weight;
  for (const auto& [a, b] : bell.product_basis) {
    const auto prod = kron(a, b);
    diagonal_weight.push_back(std::norm(prod[0]) + std::norm(prod[3]));
  }
  EXPECT_NEAR(diagonal_weight[0], 1.0, 1e-12);
  EXPECT_NEAR(diagonal_weight[1], 1.0, 1e-12);

  EXPECT_EQ(schmidt_subspace(embed_state(pair_state(2, 0, 1), 3, 3)).dimension(), 2u);
}

TEST(SchmidtSubspace, ProductsAreOrthonormal) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sub = schmidt_subspace(random_pure_state(3, 3, rng));
    for (std::size_t k = 0; k < sub.dimension(); ++k) {
      for (std::size_t l = 0; l < sub.dimension(); ++l) {
        const auto a = kron(sub.product_basis[k].first, sub.product_basis[k].second);
        const auto b = kron(sub.product_basis[l].first, sub.product_basis[l].second);
        EXPECT_NEAR(std::abs(inner(a, b) - Complex(k == l ? 1.0 : 0.0)), 0.0, 1e-10);
      }
    }
  }
}

TEST(SchmidtOrthogonal, Examples) {
  EXPECT_TRUE(schmidt_orthogonal(pair_state(4, 0, 1), pair_state(4, 2, 3)));
  Rng rng(6);
  const auto psi = random_pure_state(3, 3, rng);
  EXPECT_FALSE(schmidt_orthogonal(psi, psi));
  const auto plus = pair_state(2, 0, 1);
  const auto minus = pair_state(2, 0, 1, -1.0);
  EXPECT_NEAR(std::abs(inner(plus.amplitudes(), minus.amplitudes())), 0.0, 1e-15);
  EXPECT_FALSE(schmidt_orthogonal(plus, minus));
}

TEST(SchmidtOrthogonal, SymmetricAndDimensionChecked) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = trial % 2 ? random_product_state(2, 2, rng) : random_pure_state(2, 2, rng);
    const auto b = StateVector::basis(2, 2, static_cast<std::size_t>(trial % 2), 1);
    EXPECT_EQ(schmidt_orthogonal(a, b), schmidt_orthogonal(b, a));
  }
  EXPECT_EQ(schmidt_orthogonal(StateVector::basis(2, 2, 0, 0), StateVector::basis(2, 2, 1, 1)),
            schmidt_orthogonal(StateVector::basis(2, 2, 1, 1), StateVector::basis(2, 2, 0, 0)));
  EXPECT_THROW(schmidt_orthogonal(StateVector::basis(2, 2, 0, 0), StateVector::basis(1, 4, 0, 0)),
               std::invalid_argument);
}

TEST(Superpose, Examples) {
  const auto b01 = pair_state(4, 0, 1);
  const auto b23 = pair_state(4, 2, 3);
  const std::vector<StateVector> one{b01};
  EXPECT_EQ(superpose(one, AmplitudeDistribution({1.0})), b01);

  const std::vector<StateVector> two{b01, b23};
  const auto sum = superpose(two, AmplitudeDistribution({kInvSqrt2, kInvSqrt2}));
  const auto coeffs = schmidt_decompose(sum).coefficients;
  ASSERT_EQ(coeffs.size(), 4u);
  for (double p : coeffs) EXPECT_NEAR(p, 0.25, 1e-12);

  const auto degenerate = superpose(two, AmplitudeDistribution({1.0, 0.0}));
  EXPECT_LT(norm(ComplexVector{degenerate[0] - b01[0], degenerate[5] - b01[5]}), 1e-15);
}

TEST(Superpose, RejectsOverlappingSchmidtSubspaces) {
  const std::vector<StateVector> states{pair_state(2, 0, 1), pair_state(2, 0, 1, -1.0)};
  EXPECT_THROW(superpose(states, AmplitudeDistribution({kInvSqrt2, kInvSqrt2})), std::invalid_argument);
  const std::vector<StateVector> mismatched{StateVector::basis(2, 2, 0, 0), StateVector::basis(1, 4, 0, 3)};
  EXPECT_THROW(superpose(mismatched, AmplitudeDistribution({kInvSqrt2, kInvSqrt2})), std::invalid_argument);
}

TEST(Superpose, CoefficientsAreTheScaledUnion) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    // Two or three states living on disjoint row and column blocks.
    const auto count = static_cast<std::size_t>(rng.uniform_int(2, 3));
    std::vector<std::size_t> sizes(count);
    std::size_t d = 0;
    for (auto& s : sizes) d += (s = static_cast<std::size_t>(rng.uniform_int(1, 2)));
    std::vector<StateVector> states;
    std::vector<std::vector<double>> local_coeffs;
    std::size_t offset = 0;
    for (std::size_t s : sizes) {
      const auto local = random_pure_state(s, s, rng);
      local_coeffs.push_back(schmidt_decompose(local).coefficients);
      ComplexVector amps(d * d);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) amps[(offset + i) * d + offset + j] = local[i * s + j];
      states.emplace_back(d, d, std::move(amps));
      offset += s;
    }
    ComplexVector lambda(count);
    for (auto& z : lambda) z = rng.complex_gaussian();
    const auto amps = AmplitudeDistribution::normalized(lambda);
    const auto weights = amps.probabilities();
    std::vector<double> expected;
    for (std::size_t i = 0; i < count; ++i)
      for (double p : local_coeffs[i]) expected.push_back(weights[i] * p);
    EXPECT_LT(testing::multiset_distance(schmidt_decompose(superpose(states, amps)).coefficients, expected),
              1e-10);
  }
}

}  // namespace
}  // namespace entaudit
