// Copyright 2026 The qfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

namespace qfilter {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. All operators in the library (Pauli
/// matrices, gates, filters, Choi operators) are stored this way; the
/// dimensions involved never exceed 16, so everything is plain O(n^3).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  /// Builds from row-major entries; rejects size mismatches and non-finite
  /// components.
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;

  bool is_hermitian(double tol) const;
  bool is_psd(double tol) const;
  bool is_unitary(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

/// Standard matrix product; throws on inner-dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product with `a`'s indices major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { First, Second };

/// Reduces a (dim_first * dim_second)-dimensional operator to the kept
/// subsystem by tracing out the other one.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_first, int dim_second,
                            Subsystem keep);

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

/// Cyclic complex Jacobi eigendecomposition. Requires the input to be
/// Hermitian within 1e-10; sweeps until the off-diagonal Frobenius norm
/// drops below 1e-13 or 100 sweeps elapse.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to 0;
/// anything below that threshold is rejected as not positive semidefinite.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Singular values in descending order (via the eigenvalues of m^dagger m).
std::vector<double> singular_values(const ComplexMatrix& m);

/// y = m * x for a raw amplitude vector.
std::vector<Complex> matvec(const ComplexMatrix& m, const std::vector<Complex>& x);

}  // namespace qfilter
