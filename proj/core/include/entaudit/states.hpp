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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "entaudit/linalg.hpp"
#include "entaudit/random.hpp"

namespace entaudit {

/// Accepted deviation of a stored state's norm, trace, Hermiticity or
/// spectrum from the exact constraint.
inline constexpr double kStateTol = 1e-10;
/// Inputs whose norm is within this of one are renormalized on construction;
/// anything further off is rejected.
inline constexpr double kRenormalizeTol = 1e-6;
/// Sum-to-one tolerance for probability and amplitude distributions.
inline constexpr double kDistributionTol = 1e-12;

/// Unit vector in C^{d1} (x) C^{d2}; amplitude of |i>|j> sits at index i*d2+j.
class StateVector {
 public:
  StateVector(std::size_t d1, std::size_t d2, ComplexVector amplitudes);

  static StateVector basis(std::size_t d1, std::size_t d2, std::size_t i, std::size_t j);
  /// a (x) b, each factor normalized first.
  static StateVector product(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  /// d1 x d2 matrix with entry (i, j) = amplitude at i*d2+j.
  ComplexMatrix amplitude_matrix() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::size_t d1_;
  std::size_t d2_;
  ComplexVector amplitudes_;
};

/// Unit-trace positive operator on C^{d1} (x) C^{d2}. Obtain one through
/// validate_density or the builders below.
class DensityOperator {
 public:
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  friend DensityOperator validate_density(ComplexMatrix, std::size_t, std::size_t);
  DensityOperator(std::size_t d1, std::size_t d2, ComplexMatrix m)
      : d1_(d1), d2_(d2), matrix_(std::move(m)) {}

  std::size_t d1_;
  std::size_t d2_;
  ComplexMatrix matrix_;
};

enum class DensityIssue { wrong_shape, non_hermitian, negative_eigenvalue, wrong_trace };

std::string to_string(DensityIssue issue);

class InvalidDensity : public std::invalid_argument {
 public:
  explicit InvalidDensity(std::vector<DensityIssue> issues);
  const std::vector<DensityIssue>& issues() const { return issues_; }

 private:
  std::vector<DensityIssue> issues_;
};

/// Every constraint `m` violates, in enum order; empty when it is a state.
std::vector<DensityIssue> density_issues(const ComplexMatrix& m, std::size_t d1, std::size_t d2);

/// Throws InvalidDensity listing each violated property.
DensityOperator validate_density(ComplexMatrix m, std::size_t d1, std::size_t d2);

/// (p_1, ..., p_n) with p_i >= 0 summing to one.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> weights);
  /// Divides by the sum; the weights must be non-negative with positive sum.
  static ProbabilityDistribution normalized(std::vector<double> weights);
  static ProbabilityDistribution uniform(std::size_t n);

  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t k) const { return weights_[k]; }

 private:
  std::vector<double> weights_;
};

/// Complex amplitudes with sum |lambda_i|^2 = 1.
class AmplitudeDistribution {
 public:
  explicit AmplitudeDistribution(ComplexVector amplitudes);
  static AmplitudeDistribution normalized(ComplexVector amplitudes);

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }
  /// |lambda_i|^2
  ProbabilityDistribution probabilities() const;

 private:
  ComplexVector amplitudes_;
};

/// Finite convex combination sum_i w_i rho1_i (x) rho2_i. Factors are
/// single-system states stored as DensityOperator with d2 == 1.
struct SeparableDecomposition {
  ProbabilityDistribution weights;
  std::vector<DensityOperator> left_factors;
  std::vector<DensityOperator> right_factors;
};

/// |psi><psi|
DensityOperator projector(const StateVector& psi);

DensityOperator build_separable(const SeparableDecomposition& dec);

/// eta*sigma + (1-eta)*tau
DensityOperator mix(const DensityOperator& sigma, const DensityOperator& tau, double eta);

/// Convex combination of several states on the same system.
DensityOperator mixture(std::span<const DensityOperator> states, const ProbabilityDistribution& w);

/// Single-system state (d, 1) from a d x d matrix.
DensityOperator single_system(ComplexMatrix m);

/// Uniform on the (n-1)-simplex.
ProbabilityDistribution random_distribution(std::size_t n, Rng& rng);

StateVector random_pure_state(std::size_t d1, std::size_t d2, Rng& rng);
StateVector random_pure_state(std::size_t d1, std::size_t d2, std::uint64_t seed);

/// Haar unitary: QR of a complex Gaussian matrix with R's diagonal positive.
ComplexMatrix random_local_unitary(std::size_t d, Rng& rng);
ComplexMatrix random_local_unitary(std::size_t d, std::uint64_t seed);

StateVector random_product_state(std::size_t d1, std::size_t d2, Rng& rng);

/// Mixture of `rank` Haar-random pure states with uniform-simplex weights.
DensityOperator random_density(std::size_t d1, std::size_t d2, std::size_t rank, Rng& rng);

/// Up to `max_terms` product terms, each factor a random single-system mixture.
SeparableDecomposition random_separable_decomposition(std::size_t d1, std::size_t d2,
                                                      std::size_t max_terms, Rng& rng);

/// Zero-pads psi into C^{big_d1} (x) C^{big_d2}.
StateVector embed_state(const StateVector& psi, std::size_t big_d1, std::size_t big_d2);
/// Block extension of rho into the larger space.
DensityOperator embed_density(const DensityOperator& rho, std::size_t big_d1, std::size_t big_d2);

/// (U (x) V) psi
StateVector apply_local(const ComplexMatrix& u, const ComplexMatrix& v, const StateVector& psi);
/// (U (x) V) rho (U (x) V)^dagger
DensityOperator conjugate_local(const ComplexMatrix& u, const ComplexMatrix& v,
                                const DensityOperator& rho);

/// sum_i |ii> / sqrt(d) on C^d (x) C^d.
StateVector maximally_entangled(std::size_t d);

}  // namespace entaudit
