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

#include "qfilter/ortho.hpp"

#include <cmath>
#include <stdexcept>

namespace qfilter {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ComplexMatrix TwoStepDecomposition::as_operator() const {
  ComplexMatrix attenuator(2, 2);
  attenuator(0, 0) = Complex(attenuation, 0.0);
  attenuator(1, 1) = Complex(1.0, 0.0);
  ComplexMatrix phase(2, 2);
  phase(0, 0) = Complex(1.0, 0.0);
  phase(1, 1) = std::polar(1.0, phase_shift);
  return matmul(phase, attenuator);
}

QuantumFilter build_filter(const ComplexMatrix& a_op, Complex mean) {
  if (a_op.rows() != a_op.cols())
    throw std::invalid_argument("build_filter: operator must be square");
  const int n = a_op.rows();
  ComplexMatrix delta = a_op;
  for (int i = 0; i < n; ++i) delta(i, i) -= mean;

  const std::vector<double> sv = singular_values(delta);
  const double lambda = sv.front();
  const double scale = std::max(a_op.max_abs(), 1.0);
  if (lambda <= 1e-12 * scale)
    throw std::runtime_error("build_filter: A - a*I vanishes, filter is degenerate");

  const double op_max_sv = singular_values(a_op).front();
  QuantumFilter f;
  f.op = delta * Complex(1.0 / lambda, 0.0);
  f.lambda = lambda;
  f.mean_value = mean;
  f.mean_within_range = std::abs(mean) <= op_max_sv + 1e-12;
  return f;
}

QuantumFilter z_filter(double theta) {
  if (!(theta > 0.0) || theta > kPi / 2.0 + 1e-12)
    throw std::invalid_argument("z_filter: theta must lie in (0, pi/2]");
  const double t = std::tan(0.5 * theta);
  const double attenuation = t * t;
  if (attenuation <= 1e-12)
    throw std::runtime_error("z_filter: theta too close to the pole, success probability vanishes");
  QuantumFilter f;
  f.op = ComplexMatrix(2, 2);
  f.op(0, 0) = Complex(attenuation, 0.0);
  f.op(1, 1) = Complex(-1.0, 0.0);
  f.lambda = 1.0 + std::cos(theta);
  f.mean_value = Complex(std::cos(theta), 0.0);
  f.mean_within_range = true;
  return f;
}

FilterResult apply_filter(const QuantumFilter& f, const StateVector& psi) {
  if (f.op.cols() != psi.dim()) throw std::invalid_argument("apply_filter: dimension mismatch");
  const std::vector<Complex> raw = matvec(f.op, psi.amplitudes());
  double p = 0.0;
  for (const Complex& a : raw) p += std::norm(a);
  if (p < 1e-14)
    throw std::runtime_error("apply_filter: state filtered to zero (input is an eigenstate)");
  return FilterResult{StateVector(raw), p};
}

TwoStepDecomposition two_step(double theta) {
  if (!(theta > 0.0) || theta > kPi / 2.0 + 1e-12)
    throw std::invalid_argument("two_step: theta must lie in (0, pi/2]");
  const double half_tan = std::tan(0.5 * theta);
  TwoStepDecomposition d;
  d.theta = theta;
  d.attenuation = half_tan * half_tan;
  if (d.attenuation <= 1e-12)
    throw std::runtime_error("two_step: theta too close to the pole");
  d.phase_shift = kPi;
  d.waveplate_angle = 0.5 * std::acos(std::min(half_tan, 1.0));
  return d;
}

ComplexMatrix cz_gate() {
  ComplexMatrix u = ComplexMatrix::identity(4);
  u(3, 3) = Complex(-1.0, 0.0);
  return u;
}

StateVector prepare_entangled(const PureQubitState& s1, const PureQubitState& s2) {
  const StateVector v1 = to_vector(s1);
  const StateVector v2 = to_vector(s2);
  std::vector<Complex> amps(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) amps[2 * i + j] = v1[i] * v2[j];
  amps[3] = -amps[3];  // CZ phase on |11>
  return StateVector(std::move(amps));
}

FilterResult local_orthogonalize(const StateVector& psi, double theta1,
                                 std::optional<double> mean_tolerance) {
  if (psi.dim() != 4) throw std::invalid_argument("local_orthogonalize: expected a two-qubit state");
  if (mean_tolerance) {
    const double mean = expectation(tensor(pauli(PauliAxis::Z), ComplexMatrix::identity(2)), psi)
                            .real();
    if (std::abs(mean - std::cos(theta1)) > *mean_tolerance)
      throw std::invalid_argument(
          "local_orthogonalize: <sigma_Z x I> does not match cos(theta1) within tolerance");
  }
  const QuantumFilter f = z_filter(theta1);
  QuantumFilter local;
  local.op = tensor(f.op, ComplexMatrix::identity(2));
  local.lambda = f.lambda;
  local.mean_value = f.mean_value;
  local.mean_within_range = f.mean_within_range;
  return apply_filter(local, psi);
}

DensityMatrix apply_noisy_cz(const DensityMatrix& rho, double visibility) {
  if (rho.dim() != 4) throw std::invalid_argument("apply_noisy_cz: expected a two-qubit state");
  if (visibility < 0.0 || visibility > 1.0)
    throw std::invalid_argument("apply_noisy_cz: visibility outside [0, 1]");
  const ComplexMatrix u = cz_gate();
  const ComplexMatrix rotated = matmul(matmul(u, rho.matrix()), u);

  // Pinch over {|00>,|01>}, {|10>}, {|11>}: the idler-side coherence inside
  // the upper-arm block survives, everything passing the partially
  // polarizing splitter decoheres with weight (1 - V).
  const auto block = [](int index) { return index < 2 ? 0 : index - 1; };
  ComplexMatrix pinched = rotated;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (block(r) != block(c)) pinched(r, c) = Complex(0.0, 0.0);

  const ComplexMatrix mixed =
      rotated * Complex(visibility, 0.0) + pinched * Complex(1.0 - visibility, 0.0);
  return DensityMatrix::from_matrix(mixed);
}

std::function<DensityMatrix(const DensityMatrix&)> noisy_cz(double visibility) {
  if (visibility < 0.0 || visibility > 1.0)
    throw std::invalid_argument("noisy_cz: visibility outside [0, 1]");
  return [visibility](const DensityMatrix& rho) { return apply_noisy_cz(rho, visibility); };
}

double estimate_mean_z(std::uint64_t counts0, std::uint64_t counts1) {
  const std::uint64_t total = counts0 + counts1;
  if (total == 0) throw std::invalid_argument("estimate_mean_z: zero total counts");
  const double raw = (static_cast<double>(counts0) - static_cast<double>(counts1)) /
                     static_cast<double>(total);
  return std::min(1.0, std::max(0.0, raw));
}

}  // namespace qfilter
