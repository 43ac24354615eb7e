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

#include "qfilter/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qfilter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_to_2pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

}  // namespace

PureQubitState::PureQubitState(double theta_in, double phi_in) {
  double t = wrap_to_2pi(theta_in);
  double p = phi_in;
  if (t > kPi) {
    // (2pi - theta, phi + pi) is the same ray up to a global sign
    t = kTwoPi - t;
    p += kPi;
  }
  theta = t;
  phi = wrap_to_2pi(p);
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("StateVector: empty amplitude vector");
  double norm_sq = 0.0;
  for (const Complex& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("StateVector: non-finite amplitude");
    norm_sq += std::norm(a);
  }
  const double norm = std::sqrt(norm_sq);
  if (norm < 1e-12) throw std::invalid_argument("StateVector: vector has (near-)zero norm");
  if (std::abs(norm - 1.0) > 1e-15) {
    for (Complex& a : amps_) a /= norm;
  }
}

Complex StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("StateVector::inner: dimension mismatch");
  Complex sum(0.0, 0.0);
  for (int i = 0; i < dim(); ++i) sum += std::conj(amps_[i]) * other.amps_[i];
  return sum;
}

ComplexMatrix StateVector::projector() const {
  ComplexMatrix p(dim(), dim());
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c) p(r, c) = amps_[r] * std::conj(amps_[c]);
  return p;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("DensityMatrix: matrix must be square");
  if (!m.is_hermitian(1e-10))
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within 1e-10");
  const int n = m.rows();
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const Complex z = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-10");
  const HermitianEig eig = hermitian_eig(m);
  if (eig.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  m *= Complex(1.0 / tr, 0.0);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("DensityMatrix: dimension must be positive");
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= Complex(1.0 / dim, 0.0);
  return DensityMatrix(std::move(m));
}

StateVector to_vector(const PureQubitState& s) {
  const double half = 0.5 * s.theta;
  return StateVector({Complex(std::cos(half), 0.0),
                      std::polar(std::sin(half), s.phi)});
}

StateVector orthogonal_partner(const PureQubitState& s) {
  const double half = 0.5 * s.theta;
  return StateVector({Complex(std::sin(half), 0.0),
                      -std::polar(std::cos(half), s.phi)});
}

PureQubitState angles_from_vector(const StateVector& v) {
  if (v.dim() != 2) throw std::invalid_argument("angles_from_vector: expected a qubit");
  const double theta = 2.0 * std::atan2(std::abs(v[1]), std::abs(v[0]));
  const double phi = std::arg(v[1]) - std::arg(v[0]);
  return PureQubitState(theta, phi);
}

ComplexMatrix pauli(PauliAxis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m(0, 1) = Complex(1.0, 0.0);
      m(1, 0) = Complex(1.0, 0.0);
      break;
    case PauliAxis::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case PauliAxis::Z:
      m(0, 0) = Complex(1.0, 0.0);
      m(1, 1) = Complex(-1.0, 0.0);
      break;
  }
  return m;
}

Complex expectation(const ComplexMatrix& op, const StateVector& psi) {
  if (op.rows() != op.cols() || op.rows() != psi.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  const std::vector<Complex> applied = matvec(op, psi.amplitudes());
  Complex sum(0.0, 0.0);
  for (int i = 0; i < psi.dim(); ++i) sum += std::conj(psi[i]) * applied[i];
  return sum;
}

Complex expectation(const ComplexMatrix& op, const DensityMatrix& rho) {
  if (op.rows() != op.cols() || op.rows() != rho.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  return matmul(op, rho.matrix()).trace();
}

StateVector haar_random_pure(int dim, Rng& rng) {
  if (dim < 2) throw std::invalid_argument("haar_random_pure: dim must be >= 2");
  std::vector<Complex> amps(dim);
  for (Complex& a : amps) {
    const double re = rng.next_normal();
    const double im = rng.next_normal();
    a = Complex(re, im);
  }
  return StateVector(std::move(amps));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) equals the squared Frobenius norm for Hermitian rho.
  const double f = rho.matrix().frobenius_norm();
  return f * f;
}

}  // namespace qfilter
