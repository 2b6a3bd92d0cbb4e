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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entaudit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest row or column count any matrix in this library may have.
/// Composite bipartite dimensions d1*d2 are bounded by the same number.
inline constexpr std::size_t kMaxDimension = 256;

/// Inputs whose Hermitian part deviates by more than this are rejected.
inline constexpr double kHermitianRejectTol = 1e-8;

/// Dense, row-major complex matrix. Entries are always finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-list literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix column(std::span<const Complex> values);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }
  ComplexVector column_vector(std::size_t j) const;

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// max_ij |a_ij - b_ij|; the shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

double norm(std::span<const Complex> v);
/// <a, b> = sum conj(a_i) b_i
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

/// Kronecker product; entry ((i*B.rows+k), (j*B.cols+l)) = A(i,j) * B(k,l).
/// Throws std::length_error when the result exceeds kMaxDimension.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { first, second };

/// Partial trace of a (d1*d2)-square operator using composite index i*d2+j.
/// `traced` names the factor that is summed out.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d1, std::size_t d2,
                            Subsystem traced);

struct HermitianEigensystem {
  /// Descending.
  std::vector<double> eigenvalues;
  /// Column k is the eigenvector of eigenvalues[k]; its first non-negligible
  /// component is real and positive.
  ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi diagonalization of (H + H^dagger)/2.
/// Throws std::invalid_argument for non-square input or when H deviates from
/// Hermitian by more than kHermitianRejectTol.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// Thin SVD  A = U diag(values) V^dagger  with k = min(rows, cols) columns.
struct SingularValueDecomposition {
  std::vector<double> values;  // descending, non-negative
  ComplexMatrix u;             // rows x k, orthonormal columns
  ComplexMatrix v;             // cols x k, orthonormal columns
};

/// One-sided (Hestenes) Jacobi SVD.
SingularValueDecomposition svd(const ComplexMatrix& a);
std::vector<double> singular_values(const ComplexMatrix& a);

/// Gram-Schmidt QR of a square matrix with full column rank. R has a real,
/// positive diagonal.
struct QrDecomposition {
  ComplexMatrix q;
  ComplexMatrix r;
};
QrDecomposition qr(const ComplexMatrix& a);

/// Sum of absolute eigenvalues of a Hermitian operator.
double trace_norm(const ComplexMatrix& hermitian);

}  // namespace entaudit
