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

#include "qfilter/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfilter {

namespace {

constexpr double kPi = std::numbers::pi;

void hermitize(ComplexMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c) {
      const Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
}

void check_theta_range(double theta, const char* who) {
  if (theta < -1e-12 || theta > kPi / 2.0 + 1e-12)
    throw std::invalid_argument(std::string(who) + ": theta must lie in [0, pi/2]");
}

}  // namespace

ChoiOperator ChoiOperator::make(int d_in, int d_out, ComplexMatrix matrix) {
  if (d_in < 1 || d_out < 1) throw std::invalid_argument("ChoiOperator: bad dimensions");
  const int total = d_in * d_out;
  if (matrix.rows() != total || matrix.cols() != total)
    throw std::invalid_argument("ChoiOperator: matrix does not match d_in * d_out");
  if (!matrix.is_hermitian(1e-10))
    throw std::invalid_argument("ChoiOperator: matrix is not Hermitian within 1e-10");
  hermitize(matrix);
  const HermitianEig eig = hermitian_eig(matrix);
  if (eig.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("ChoiOperator: matrix is not positive semidefinite");
  const ComplexMatrix reduced = partial_trace(matrix, d_in, d_out, Subsystem::First);
  const ComplexMatrix delta = reduced - ComplexMatrix::identity(d_in);
  if (delta.max_abs() > 1e-10)
    throw std::invalid_argument("ChoiOperator: Tr_out[chi] differs from the identity");
  return ChoiOperator(d_in, d_out, std::move(matrix));
}

DensityMatrix apply_choi(const ChoiOperator& chi, const DensityMatrix& rho) {
  if (rho.dim() != chi.d_in()) throw std::invalid_argument("apply_choi: dimension mismatch");
  const ComplexMatrix lifted =
      tensor(rho.matrix().transpose(), ComplexMatrix::identity(chi.d_out()));
  ComplexMatrix out =
      partial_trace(matmul(lifted, chi.matrix()), chi.d_in(), chi.d_out(), Subsystem::Second);
  hermitize(out);
  return DensityMatrix::from_matrix(std::move(out));
}

ChoiOperator identity_choi(int dim) {
  if (dim < 1) throw std::invalid_argument("identity_choi: bad dimension");
  ComplexMatrix phi(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) phi(i * dim + i, j * dim + j) = Complex(1.0, 0.0);
  return ChoiOperator::make(dim, dim, std::move(phi));
}

double theta_threshold() { return 2.0 * std::asin(1.0 / std::sqrt(3.0)); }

ComplexMatrix r_theta(double theta) {
  check_theta_range(theta, "r_theta");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double c2 = c * c, s2 = s * s;
  ComplexMatrix r(4, 4);
  r(0, 0) = Complex(c2 * c2, 0.0);
  r(1, 1) = Complex(c2 * s2, 0.0);
  r(2, 2) = Complex(c2 * s2, 0.0);
  r(3, 3) = Complex(s2 * s2, 0.0);
  r(0, 3) = Complex(c2 * s2, 0.0);
  r(3, 0) = Complex(c2 * s2, 0.0);
  return r;
}

double average_overlap(const ChoiOperator& chi, double theta) {
  if (chi.d_in() != 2 || chi.d_out() != 2)
    throw std::invalid_argument("average_overlap: expected a qubit channel");
  return matmul(r_theta(theta), chi.matrix()).trace().real();
}

double a_opt(double theta) {
  check_theta_range(theta, "a_opt");
  if (theta > theta_threshold()) return 1.0;
  const double s = std::sin(0.5 * theta);
  return s * s / std::cos(theta);
}

ChoiOperator chi_opt(double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("chi_opt: theta must be positive");
  check_theta_range(theta, "chi_opt");
  const double a = a_opt(theta);
  ComplexMatrix chi(4, 4);
  chi(0, 0) = Complex(a * a, 0.0);
  chi(0, 3) = Complex(-a, 0.0);
  chi(3, 0) = Complex(-a, 0.0);
  chi(3, 3) = Complex(1.0, 0.0);
  chi(1, 1) = Complex(1.0 - a * a, 0.0);
  return ChoiOperator::make(2, 2, std::move(chi));
}

double f_min(double theta) {
  check_theta_range(theta, "f_min");
  const double c = std::cos(theta);
  if (theta > theta_threshold()) return c * c;
  const double sin_half = std::sin(0.5 * theta);
  const double s2 = sin_half * sin_half;
  const double sin_theta = std::sin(theta);
  return 0.25 * sin_theta * sin_theta - s2 * s2 * s2 / c;
}

Certificate certificate_m(double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("certificate_m: theta must be positive");
  check_theta_range(theta, "certificate_m");
  const ComplexMatrix r = r_theta(theta);
  const ChoiOperator chi = chi_opt(theta);
  ComplexMatrix lambda = partial_trace(matmul(r, chi.matrix()), 2, 2, Subsystem::First);
  hermitize(lambda);
  ComplexMatrix m = r - tensor(lambda, ComplexMatrix::identity(2));
  hermitize(m);
  const HermitianEig eig = hermitian_eig(m);
  Certificate cert;
  cert.m = std::move(m);
  for (int i = 0; i < 4; ++i) cert.eigenvalues[static_cast<std::size_t>(i)] = eig.eigenvalues[i];
  cert.lambda_op = std::move(lambda);
  return cert;
}

std::array<double, 4> certificate_eigenvalues_closed_form(double theta) {
  check_theta_range(theta, "certificate_eigenvalues_closed_form");
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double c2 = c * c, s2 = s * s;
  std::array<double, 4> vals{};
  if (theta <= theta_threshold()) {
    const double gap = c2 - s2;  // cos(theta), positive on this branch
    vals = {0.0, 0.0, c2 * gap + c2 * s2 * s2 / gap, c2 * s2 + s2 * s2 * s2 / gap};
  } else {
    vals = {0.0, 2.0 * c2 * s2, c2 * (2.0 * s2 - c2), s2 * (2.0 * c2 - s2)};
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

DensityMatrix universal_inverter(const DensityMatrix& rho) {
  const int d = rho.dim();
  ComplexMatrix out = ComplexMatrix::identity(d) * Complex(static_cast<double>(d), 0.0);
  out -= rho.matrix();
  out *= Complex(1.0 / (static_cast<double>(d) * d - 1.0), 0.0);
  return DensityMatrix::from_matrix(std::move(out));
}

ChoiOperator universal_inverter_choi(int dim) {
  if (dim < 2) throw std::invalid_argument("universal_inverter_choi: dim must be >= 2");
  const double d = dim;
  ComplexMatrix chi = ComplexMatrix::identity(dim * dim) * Complex(d, 0.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) chi(i * dim + i, j * dim + j) -= Complex(1.0, 0.0);
  chi *= Complex(1.0 / (d * d - 1.0), 0.0);
  return ChoiOperator::make(dim, dim, std::move(chi));
}

ChoiOperator random_cptp(int d_in, int d_out, Rng& rng) {
  if (d_in < 2 || d_out < 2) throw std::invalid_argument("random_cptp: dimensions must be >= 2");
  const int total = d_in * d_out;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ComplexMatrix g(total, total);
    for (int r = 0; r < total; ++r)
      for (int c = 0; c < total; ++c) g(r, c) = Complex(rng.next_normal(), rng.next_normal());
    ComplexMatrix x = matmul(g, g.adjoint());
    hermitize(x);

    ComplexMatrix reduced = partial_trace(x, d_in, d_out, Subsystem::First);
    hermitize(reduced);
    const HermitianEig eig = hermitian_eig(reduced);
    if (eig.eigenvalues.front() < 1e-10 * eig.eigenvalues.back()) continue;  // resample

    ComplexMatrix inv_root(d_in, d_in);
    for (int r = 0; r < d_in; ++r)
      for (int c = 0; c < d_in; ++c) {
        Complex sum(0.0, 0.0);
        for (int k = 0; k < d_in; ++k)
          sum += eig.eigenvectors(r, k) * (1.0 / std::sqrt(eig.eigenvalues[k])) *
                 std::conj(eig.eigenvectors(c, k));
        inv_root(r, c) = sum;
      }
    const ComplexMatrix scale = tensor(inv_root, ComplexMatrix::identity(d_out));
    ComplexMatrix chi = matmul(matmul(scale, x), scale.adjoint());
    hermitize(chi);
    return ChoiOperator::make(d_in, d_out, std::move(chi));
  }
  throw std::runtime_error("random_cptp: repeated singular partial traces");
}

}  // namespace qfilter
