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

#include "qfilter/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfilter {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "ComplexMatrix: dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(rows > 0 && cols > 0, "ComplexMatrix: dimensions must be positive");
  require(entries_.size() == static_cast<std::size_t>(rows) * cols,
          "ComplexMatrix: entry count does not match rows*cols");
  if (!is_finite()) throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(r, c) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  require(rows_ == cols_, "trace: matrix must be square");
  Complex t(0.0, 0.0);
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(1e-10)) return false;
  const HermitianEig eig = hermitian_eig(*this);
  return eig.eigenvalues.front() >= -tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  const ComplexMatrix prod = matmul(adjoint(), *this);
  const ComplexMatrix delta = prod - identity(rows_);
  return delta.max_abs() <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "operator+: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "operator-: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions do not match");
  ComplexMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const Complex f = a(ar, ac);
      if (f == Complex(0.0, 0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_first, int dim_second,
                            Subsystem keep) {
  require(dim_first > 0 && dim_second > 0, "partial_trace: dimensions must be positive");
  const int total = dim_first * dim_second;
  require(m.rows() == total && m.cols() == total,
          "partial_trace: matrix does not match the given dimensions");
  if (keep == Subsystem::First) {
    ComplexMatrix out(dim_first, dim_first);
    for (int a = 0; a < dim_first; ++a)
      for (int ap = 0; ap < dim_first; ++ap) {
        Complex sum(0.0, 0.0);
        for (int b = 0; b < dim_second; ++b) sum += m(a * dim_second + b, ap * dim_second + b);
        out(a, ap) = sum;
      }
    return out;
  }
  ComplexMatrix out(dim_second, dim_second);
  for (int b = 0; b < dim_second; ++b)
    for (int bp = 0; bp < dim_second; ++bp) {
      Complex sum(0.0, 0.0);
      for (int a = 0; a < dim_first; ++a) sum += m(a * dim_second + b, a * dim_second + bp);
      out(b, bp) = sum;
    }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), "hermitian_eig: matrix must be square");
  if (!m.is_hermitian(1e-10))
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within 1e-10");

  const int n = m.rows();
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr int kMaxSweeps = 100;
  constexpr double kOffTol = 1e-13;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off) < kOffTol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq_abs = std::abs(a(p, q));
        if (apq_abs < 1e-300) {
          a(p, q) = a(q, p) = Complex(0.0, 0.0);
          continue;
        }
        const Complex w = a(p, q) / apq_abs;  // phase of the pivot
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq_abs);
        const double t =
            (tau == 0.0) ? 1.0
                         : ((tau > 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau)));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex wc = std::conj(w);
        // Right-multiply A and V by the rotation, then left-multiply A by
        // its adjoint; the combined similarity zeroes the (p, q) pivot.
        for (int i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - wc * s * aiq;
          a(i, q) = s * aip + wc * c * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - wc * s * viq;
          v(i, q) = s * vip + wc * c * viq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - w * s * aqj;
          a(q, j) = s * apj + w * c * aqj;
        }
        a(p, q) = a(q, p) = Complex(0.0, 0.0);
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEig eig = hermitian_eig(m);
  const int n = m.rows();
  std::vector<double> roots(n);
  for (int i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -1e-10)
      throw std::runtime_error("psd_sqrt: matrix is not positive semidefinite");
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Complex sum(0.0, 0.0);
      for (int k = 0; k < n; ++k)
        sum += eig.eigenvectors(r, k) * roots[k] * std::conj(eig.eigenvectors(c, k));
      out(r, c) = sum;
    }
  // exact Hermitian symmetrization of round-off
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const Complex z = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = z;
      out(c, r) = std::conj(z);
    }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  const HermitianEig eig = hermitian_eig(matmul(m.adjoint(), m));
  std::vector<double> sv(eig.eigenvalues.size());
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[sv.size() - 1 - i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
  return sv;
}

std::vector<Complex> matvec(const ComplexMatrix& m, const std::vector<Complex>& x) {
  require(static_cast<std::size_t>(m.cols()) == x.size(), "matvec: dimension mismatch");
  std::vector<Complex> y(m.rows(), Complex(0.0, 0.0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  return y;
}

}  // namespace qfilter
