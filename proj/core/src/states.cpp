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
#include "entaudit/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entaudit {

namespace {

void require_dims(std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("subsystem dimensions must be positive");
  if (d1 * d2 > kMaxDimension) {
    throw std::length_error("composite dimension " + std::to_string(d1 * d2) +
                            " exceeds limit " + std::to_string(kMaxDimension));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex sym = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = sym;
      h(j, i) = std::conj(sym);
    }
  }
  return h;
}

std::vector<double> uniform_simplex(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------

StateVector::StateVector(std::size_t d1, std::size_t d2, ComplexVector amplitudes)
    : d1_(d1), d2_(d2), amplitudes_(std::move(amplitudes)) {
  require_dims(d1, d2);
  if (amplitudes_.size() != d1 * d2) {
    throw std::invalid_argument("state has " + std::to_string(amplitudes_.size()) +
                                " amplitudes, expected " + std::to_string(d1 * d2));
  }
  for (const auto& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("state amplitudes must be finite");
    }
  }
  const double len = norm(amplitudes_);
  if (std::abs(len - 1.0) > kRenormalizeTol) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(len) + ")");
  }
  if (len != 1.0) {
    for (auto& z : amplitudes_) z /= len;
  }
}

StateVector StateVector::basis(std::size_t d1, std::size_t d2, std::size_t i, std::size_t j) {
  if (i >= d1 || j >= d2) throw std::out_of_range("basis index outside the subsystem");
  ComplexVector amps(d1 * d2);
  amps[i * d2 + j] = 1.0;
  return StateVector(d1, d2, std::move(amps));
}

StateVector StateVector::product(std::span<const Complex> a, std::span<const Complex> b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("product factor has zero norm");
  ComplexVector amps = kron(a, b);
  for (auto& z : amps) z /= na * nb;
  return StateVector(a.size(), b.size(), std::move(amps));
}

ComplexMatrix StateVector::amplitude_matrix() const {
  return ComplexMatrix(d1_, d2_, amplitudes_);
}

// ---------------------------------------------------------------------------

std::string to_string(DensityIssue issue) {
  switch (issue) {
    case DensityIssue::wrong_shape: return "wrong shape";
    case DensityIssue::non_hermitian: return "not Hermitian";
    case DensityIssue::negative_eigenvalue: return "negative eigenvalue";
    case DensityIssue::wrong_trace: return "trace is not 1";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<DensityIssue>& issues) {
  std::string msg = "invalid density operator:";
  for (std::size_t k = 0; k < issues.size(); ++k) {
    msg += (k == 0 ? " " : ", ") + to_string(issues[k]);
  }
  return msg;
}

}  // namespace

InvalidDensity::InvalidDensity(std::vector<DensityIssue> issues)
    : std::invalid_argument(describe(issues)), issues_(std::move(issues)) {}

std::vector<DensityIssue> density_issues(const ComplexMatrix& m, std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0 || !m.is_square() || m.rows() != d1 * d2) {
    return {DensityIssue::wrong_shape};
  }
  std::vector<DensityIssue> issues;
  if (hermiticity_defect(m) > kStateTol) issues.push_back(DensityIssue::non_hermitian);
  const auto spectrum = hermitian_eigensystem(hermitian_part(m)).eigenvalues;
  if (spectrum.back() < -kStateTol) issues.push_back(DensityIssue::negative_eigenvalue);
  if (std::abs(m.trace() - 1.0) > kStateTol) issues.push_back(DensityIssue::wrong_trace);
  return issues;
}

DensityOperator validate_density(ComplexMatrix m, std::size_t d1, std::size_t d2) {
  require_dims(d1, d2);
  auto issues = density_issues(m, d1, d2);
  if (!issues.empty()) throw InvalidDensity(std::move(issues));
  return DensityOperator(d1, d2, std::move(m));
}

// ---------------------------------------------------------------------------

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("probability distribution is empty");
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("probability weights must be finite and non-negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kDistributionTol) {
    throw std::invalid_argument("probability weights sum to " + std::to_string(total));
  }
}

ProbabilityDistribution ProbabilityDistribution::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("probability weights must be finite and non-negative");
    }
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("probability weights have zero sum");
  for (auto& w : weights) w /= total;
  return ProbabilityDistribution(std::move(weights));
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t n) {
  return ProbabilityDistribution::normalized(std::vector<double>(n, 1.0));
}

AmplitudeDistribution::AmplitudeDistribution(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw std::invalid_argument("amplitude distribution is empty");
  double total = 0.0;
  for (const auto& z : amplitudes_) total += std::norm(z);
  if (!std::isfinite(total) || std::abs(total - 1.0) > kDistributionTol) {
    throw std::invalid_argument("squared amplitudes sum to " + std::to_string(total));
  }
}

AmplitudeDistribution AmplitudeDistribution::normalized(ComplexVector amplitudes) {
  const double len = norm(amplitudes);
  if (!(len > 0.0)) throw std::invalid_argument("amplitudes have zero norm");
  for (auto& z : amplitudes) z /= len;
  return AmplitudeDistribution(std::move(amplitudes));
}

ProbabilityDistribution AmplitudeDistribution::probabilities() const {
  std::vector<double> p;
  p.reserve(amplitudes_.size());
  for (const auto& z : amplitudes_) p.push_back(std::norm(z));
  return ProbabilityDistribution::normalized(std::move(p));
}

// ---------------------------------------------------------------------------

DensityOperator projector(const StateVector& psi) {
  return validate_density(ComplexMatrix::outer(psi.amplitudes()), psi.d1(), psi.d2());
}

DensityOperator single_system(ComplexMatrix m) {
  const std::size_t d = m.rows();
  return validate_density(std::move(m), d, 1);
}

DensityOperator build_separable(const SeparableDecomposition& dec) {
  const std::size_t terms = dec.weights.size();
  if (dec.left_factors.size() != terms || dec.right_factors.size() != terms) {
    throw std::invalid_argument("separable decomposition: factor lists and weights differ in length");
  }
  const std::size_t d1 = dec.left_factors.front().matrix().rows();
  const std::size_t d2 = dec.right_factors.front().matrix().rows();
  require_dims(d1, d2);
  ComplexMatrix total(d1 * d2, d1 * d2);
  for (std::size_t k = 0; k < terms; ++k) {
    const auto& left = dec.left_factors[k].matrix();
    const auto& right = dec.right_factors[k].matrix();
    if (left.rows() != d1 || right.rows() != d2) {
      throw std::invalid_argument("separable decomposition: factor " + std::to_string(k) +
                                  " has mismatched dimension");
    }
    total += dec.weights[k] * kron(left, right);
  }
  return validate_density(std::move(total), d1, d2);
}

DensityOperator mix(const DensityOperator& sigma, const DensityOperator& tau, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("mix: eta must lie in [0, 1]");
  if (sigma.d1() != tau.d1() || sigma.d2() != tau.d2()) {
    throw std::invalid_argument("mix: dimension mismatch");
  }
  ComplexMatrix m = eta * sigma.matrix();
  m += (1.0 - eta) * tau.matrix();
  return validate_density(std::move(m), sigma.d1(), sigma.d2());
}

DensityOperator mixture(std::span<const DensityOperator> states, const ProbabilityDistribution& w) {
  if (states.empty() || states.size() != w.size()) {
    throw std::invalid_argument("mixture: states and weights differ in length");
  }
  const std::size_t d1 = states.front().d1();
  const std::size_t d2 = states.front().d2();
  ComplexMatrix m(d1 * d2, d1 * d2);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].d1() != d1 || states[k].d2() != d2) {
      throw std::invalid_argument("mixture: dimension mismatch");
    }
    m += w[k] * states[k].matrix();
  }
  return validate_density(std::move(m), d1, d2);
}

ProbabilityDistribution random_distribution(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_distribution: empty");
  return ProbabilityDistribution::normalized(uniform_simplex(n, rng));
}

StateVector random_pure_state(std::size_t d1, std::size_t d2, Rng& rng) {
  require_dims(d1, d2);
  ComplexVector amps(d1 * d2);
  for (auto& z : amps) z = rng.complex_gaussian();
  const double len = norm(amps);
  for (auto& z : amps) z /= len;
  return StateVector(d1, d2, std::move(amps));
}

StateVector random_pure_state(std::size_t d1, std::size_t d2, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_state(d1, d2, rng);
}

ComplexMatrix random_local_unitary(std::size_t d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  }
  // Gram-Schmidt yields R with a positive real diagonal, which makes Q Haar.
  return qr(g).q;
}

ComplexMatrix random_local_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_local_unitary(d, rng);
}

StateVector random_product_state(std::size_t d1, std::size_t d2, Rng& rng) {
  ComplexVector a(d1), b(d2);
  for (auto& z : a) z = rng.complex_gaussian();
  for (auto& z : b) z = rng.complex_gaussian();
  return StateVector::product(a, b);
}

DensityOperator random_density(std::size_t d1, std::size_t d2, std::size_t rank, Rng& rng) {
  if (rank == 0) throw std::invalid_argument("random_density: rank must be positive");
  std::vector<DensityOperator> parts;
  parts.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) parts.push_back(projector(random_pure_state(d1, d2, rng)));
  return mixture(parts, ProbabilityDistribution::normalized(uniform_simplex(rank, rng)));
}

SeparableDecomposition random_separable_decomposition(std::size_t d1, std::size_t d2,
                                                      std::size_t max_terms, Rng& rng) {
  if (max_terms == 0) throw std::invalid_argument("separable decomposition needs a term");
  const auto terms = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(max_terms)));
  std::vector<DensityOperator> left, right;
  for (std::size_t k = 0; k < terms; ++k) {
    const auto r1 = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d1)));
    const auto r2 = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d2)));
    left.push_back(random_density(d1, 1, r1, rng));
    right.push_back(random_density(d2, 1, r2, rng));
  }
  return SeparableDecomposition{ProbabilityDistribution::normalized(uniform_simplex(terms, rng)),
                                std::move(left), std::move(right)};
}

StateVector embed_state(const StateVector& psi, std::size_t big_d1, std::size_t big_d2) {
  if (big_d1 < psi.d1() || big_d2 < psi.d2()) {
    throw std::invalid_argument("embed_state: target space is smaller than the source");
  }
  require_dims(big_d1, big_d2);
  ComplexVector amps(big_d1 * big_d2);
  for (std::size_t i = 0; i < psi.d1(); ++i) {
    for (std::size_t j = 0; j < psi.d2(); ++j) amps[i * big_d2 + j] = psi[i * psi.d2() + j];
  }
  return StateVector(big_d1, big_d2, std::move(amps));
}

DensityOperator embed_density(const DensityOperator& rho, std::size_t big_d1, std::size_t big_d2) {
  const std::size_t d1 = rho.d1();
  const std::size_t d2 = rho.d2();
  if (big_d1 < d1 || big_d2 < d2) {
    throw std::invalid_argument("embed_density: target space is smaller than the source");
  }
  require_dims(big_d1, big_d2);
  ComplexMatrix m(big_d1 * big_d2, big_d1 * big_d2);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      for (std::size_t ip = 0; ip < d1; ++ip) {
        for (std::size_t jp = 0; jp < d2; ++jp) {
          m(i * big_d2 + j, ip * big_d2 + jp) = rho.matrix()(i * d2 + j, ip * d2 + jp);
        }
      }
    }
  }
  return validate_density(std::move(m), big_d1, big_d2);
}

StateVector apply_local(const ComplexMatrix& u, const ComplexMatrix& v, const StateVector& psi) {
  if (u.rows() != psi.d1() || u.cols() != psi.d1() || v.rows() != psi.d2() || v.cols() != psi.d2()) {
    throw std::invalid_argument("apply_local: operator dimensions do not match the state");
  }
  return StateVector(psi.d1(), psi.d2(), kron(u, v) * psi.amplitudes());
}

DensityOperator conjugate_local(const ComplexMatrix& u, const ComplexMatrix& v,
                                const DensityOperator& rho) {
  if (u.rows() != rho.d1() || u.cols() != rho.d1() || v.rows() != rho.d2() || v.cols() != rho.d2()) {
    throw std::invalid_argument("conjugate_local: operator dimensions do not match the state");
  }
  const ComplexMatrix w = kron(u, v);
  return validate_density(w * rho.matrix() * w.adjoint(), rho.d1(), rho.d2());
}

StateVector maximally_entangled(std::size_t d) {
  ComplexVector amps(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) amps[i * d + i] = a;
  return StateVector(d, d, std::move(amps));
}

}  // namespace entaudit
