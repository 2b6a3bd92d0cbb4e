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

#include "entaudit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entaudit {

namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_finite(std::span<const Complex> entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

void require_dimension(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw std::length_error("matrix dimension " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds limit " +
                            std::to_string(kMaxDimension));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

// Makes the first component with modulus above `floor` real and positive.
void fix_phase(ComplexVector& v, double floor) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v[k]);
    if (mag > floor) {
      const Complex phase = std::conj(v[k]) / mag;
      for (auto& w : v) w *= phase;
      v[k] = mag;
      return;
    }
  }
}

// Lexicographic order used only to break exact eigenvalue ties.
bool lexicographically_greater(const ComplexVector& a, const ComplexVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].real() != b[k].real()) return a[k].real() > b[k].real();
    if (a[k].imag() != b[k].imag()) return a[k].imag() > b[k].imag();
  }
  return false;
}

double sign_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_dimension(rows, cols);
  entries_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_dimension(rows, cols);
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  require_dimension(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  require_finite(m.entries_);
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
  return ComplexMatrix(values.size(), 1, ComplexVector(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

ComplexVector ComplexMatrix::column_vector(std::size_t j) const {
  ComplexVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermiticity_defect: non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

double norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  Complex acc{};
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw std::length_error("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds limit " + std::to_string(kMaxDimension));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d1, std::size_t d2,
                            Subsystem traced) {
  if (d1 == 0 || d2 == 0 || !m.is_square() || m.rows() != d1 * d2) {
    throw std::invalid_argument("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " +
                                std::to_string(d1 * d2) + " square");
  }
  if (traced == Subsystem::second) {
    ComplexMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i) {
      for (std::size_t ip = 0; ip < d1; ++ip) {
        Complex acc{};
        for (std::size_t j = 0; j < d2; ++j) acc += m(i * d2 + j, ip * d2 + j);
        out(i, ip) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out(d2, d2);
  for (std::size_t j = 0; j < d2; ++j) {
    for (std::size_t jp = 0; jp < d2; ++jp) {
      Complex acc{};
      for (std::size_t i = 0; i < d1; ++i) acc += m(i * d2 + j, i * d2 + jp);
      out(j, jp) = acc;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigensystem: cyclic Jacobi with complex plane rotations.
//
// For the pivot h = H(p,q) = |h| e^{i phi}, the rotation G = D R first removes
// the phase (D = diag(1, e^{-i phi}) on the p,q plane) and then applies the
// real symmetric Jacobi rotation R that annihilates the now-real pivot.

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("hermitian_eigensystem: non-square matrix");
  const double defect = hermiticity_defect(input);
  if (defect > kHermitianRejectTol) {
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  const std::size_t n = input.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex sym = 0.5 * (input(i, j) + std::conj(input(j, i)));
      h(i, j) = sym;
      h(j, i) = std::conj(sym);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob = 0.0;
  for (const auto& z : h.entries()) frob += std::norm(z);
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(h(p, q));
    }
    if (std::sqrt(2.0 * off) <= 1e-16 * frob || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        const double a = h(p, p).real();
        const double b = h(q, q).real();
        if (mag < 1e-18 * (std::abs(a) + std::abs(b))) {
          h(p, q) = h(q, p) = 0.0;
          continue;
        }
        const Complex e = std::conj(hpq) / mag;  // e^{-i phi}
        const double theta = (b - a) / (2.0 * mag);
        const double t = sign_or_one(theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Columns: X <- X G.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xp = h(k, p);
          const Complex xq = h(k, q);
          h(k, p) = c * xp - s * e * xq;
          h(k, q) = s * xp + c * e * xq;
          const Complex vp = v(k, p);
          const Complex vq = v(k, q);
          v(k, p) = c * vp - s * e * vq;
          v(k, q) = s * vp + c * e * vq;
        }
        // Rows: X <- G^dagger X.
        const Complex ec = std::conj(e);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex xp = h(p, k);
          const Complex xq = h(q, k);
          h(p, k) = c * xp - s * ec * xq;
          h(q, k) = s * xp + c * ec * xq;
        }
        h(p, q) = h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
      }
    }
  }

  struct Pair {
    double value;
    ComplexVector vector;
  };
  std::vector<Pair> pairs(n);
  for (std::size_t k = 0; k < n; ++k) {
    pairs[k].value = h(k, k).real();
    pairs[k].vector = v.column_vector(k);
    fix_phase(pairs[k].vector, 1e-12);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.value != y.value) return x.value > y.value;
    return lexicographically_greater(x.vector, y.vector);
  });

  HermitianEigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = pairs[k].value;
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = pairs[k].vector[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVD: one-sided Jacobi on the columns of W = A V. Each rotation makes one
// pair of columns orthogonal; at convergence the column norms are the
// singular values.

namespace {

SingularValueDecomposition svd_tall(const ComplexMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<ComplexVector> w(n), vcols(n, ComplexVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = a.column_vector(j);
    vcols[j][j] = 1.0;
  }

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = std::norm(norm(w[p]));
        const double beta = std::norm(norm(w[q]));
        if (alpha == 0.0 || beta == 0.0) continue;
        const Complex gamma = inner(w[p], w[q]);
        const double mag = std::abs(gamma);
        if (mag <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex e = std::conj(gamma) / mag;  // e^{-i phi}
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = sign_or_one(zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const Complex x = w[p][k];
          const Complex y = e * w[q][k];
          w[p][k] = c * x - s * y;
          w[q][k] = s * x + c * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = vcols[p][k];
          const Complex y = e * vcols[q][k];
          vcols[p][k] = c * x - s * y;
          vcols[q][k] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(w[j]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  // Columns this small are roundoff left over from a rank deficiency.
  const double null_floor = 1e-13 * (n > 0 ? sigma[order[0]] : 0.0);
  SingularValueDecomposition out{std::vector<double>(n), ComplexMatrix(m, n), ComplexMatrix(n, n)};
  std::vector<ComplexVector> ucols;
  std::vector<std::size_t> missing;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.values[k] = sigma[j];
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = vcols[j][i];
    ComplexVector u = w[j];
    if (sigma[j] > null_floor) {
      for (auto& z : u) z /= sigma[j];
    } else {
      u.assign(m, Complex(0.0));
      missing.push_back(k);
    }
    ucols.push_back(std::move(u));
  }

  // Null columns of U are completed to an orthonormal set from the standard basis.
  std::size_t basis = 0;
  for (std::size_t k : missing) {
    for (; basis < m; ++basis) {
      ComplexVector cand(m);
      cand[basis] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t other = 0; other < n; ++other) {
          if (other == k) continue;
          const Complex proj = inner(ucols[other], cand);
          for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * ucols[other][i];
        }
      }
      const double len = norm(cand);
      if (len > 1e-8) {
        for (auto& z : cand) z /= len;
        ucols[k] = std::move(cand);
        ++basis;
        break;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) out.u(i, k) = ucols[k][i];
  }
  return out;
}

}  // namespace

SingularValueDecomposition svd(const ComplexMatrix& a) {
  if (a.rows() >= a.cols()) return svd_tall(a);
  // A = (A^dagger)^dagger = (U' S V'^dagger)^dagger = V' S U'^dagger.
  SingularValueDecomposition t = svd_tall(a.adjoint());
  return SingularValueDecomposition{std::move(t.values), std::move(t.v), std::move(t.u)};
}

std::vector<double> singular_values(const ComplexMatrix& a) { return svd(a).values; }

QrDecomposition qr(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("qr: non-square matrix");
  const std::size_t n = a.rows();
  QrDecomposition out{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  std::vector<ComplexVector> q;
  for (std::size_t j = 0; j < n; ++j) {
    ComplexVector col = a.column_vector(j);
    // Two passes of modified Gram-Schmidt keep Q orthonormal to roundoff.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        const Complex proj = inner(q[i], col);
        out.r(i, j) += proj;
        for (std::size_t k = 0; k < n; ++k) col[k] -= proj * q[i][k];
      }
    }
    const double len = norm(col);
    if (len == 0.0) throw std::invalid_argument("qr: matrix is rank deficient");
    out.r(j, j) = len;
    for (auto& z : col) z /= len;
    q.push_back(std::move(col));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.q(i, j) = q[j][i];
  }
  return out;
}

double trace_norm(const ComplexMatrix& hermitian) {
  double acc = 0.0;
  for (double lambda : hermitian_eigensystem(hermitian).eigenvalues) acc += std::abs(lambda);
  return acc;
}

}  // namespace entaudit
