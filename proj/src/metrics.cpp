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

#include "qfilter/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfilter {

namespace {

// Square roots of the eigenvalues with round-off suppressed: eigenvalues
// below 1e-13 of the largest are treated as exact zeros, otherwise the
// square root amplifies 1e-17-sized noise into 1e-9-sized terms.
std::vector<double> clamped_sqrt_spectrum(const ComplexMatrix& m) {
  const HermitianEig eig = hermitian_eig(m);
  const double floor = 1e-13 * std::max(eig.eigenvalues.back(), 0.0);
  std::vector<double> roots;
  roots.reserve(eig.eigenvalues.size());
  for (double lambda : eig.eigenvalues)
    roots.push_back(lambda > floor ? std::sqrt(lambda) : 0.0);
  return roots;
}

}  // namespace

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const ComplexMatrix root = psd_sqrt(rho1.matrix());
  const ComplexMatrix inner = matmul(matmul(root, rho2.matrix()), root);
  double sum = 0.0;
  for (double r : clamped_sqrt_spectrum(inner)) sum += r;
  const double f = sum * sum;
  return std::min(1.0, std::max(0.0, f));
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence: expected a two-qubit state");
  const ComplexMatrix yy = tensor(pauli(PauliAxis::Y), pauli(PauliAxis::Y));
  const ComplexMatrix tilde = matmul(matmul(yy, rho.matrix().conjugate()), yy);
  // The eigenvalues of rho*tilde equal those of the Hermitian
  // sqrt(rho) tilde sqrt(rho).
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  std::vector<double> mu = clamped_sqrt_spectrum(matmul(matmul(root, tilde), root));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  const double c = mu[0] - mu[1] - mu[2] - mu[3];
  return std::min(1.0, std::max(0.0, c));
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return binary_entropy(x);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double pure_entropy(double theta1, double theta2) {
  const double s1 = std::sin(theta1);
  const double s2 = std::sin(theta2);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - s1 * s1 * s2 * s2)));
  return binary_entropy(x);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  double s = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda > 1e-15) s -= lambda * std::log2(lambda);
  }
  return s;
}

HaarAverage haar_average_overlap(const std::function<DensityMatrix(const DensityMatrix&)>& channel,
                                 int dim, int samples, Rng& rng) {
  if (samples < 2) throw std::invalid_argument("haar_average_overlap: need at least 2 samples");
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const StateVector psi = haar_random_pure(dim, rng);
    const DensityMatrix out = channel(DensityMatrix::from_pure(psi));
    // For a pure reference the Uhlmann fidelity reduces to <psi|rho|psi>.
    const double f =
        std::min(1.0, std::max(0.0, expectation(out.matrix(), psi).real()));
    const double delta = f - mean;
    mean += delta / (i + 1);
    m2 += delta * (f - mean);
  }
  const double variance = m2 / (samples - 1);
  return HaarAverage{mean, std::sqrt(std::max(variance, 0.0) / samples)};
}

double process_to_average_fidelity(double f_chi, int dim) {
  if (f_chi < 0.0 || f_chi > 1.0)
    throw std::invalid_argument("process_to_average_fidelity: F_chi outside [0, 1]");
  if (dim < 2) throw std::invalid_argument("process_to_average_fidelity: dim must be >= 2");
  return (dim * f_chi + 1.0) / (dim + 1.0);
}

}  // namespace qfilter
