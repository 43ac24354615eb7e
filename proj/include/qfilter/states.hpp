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
#include <numbers>
#include <vector>

#include "qfilter/complex_matrix.hpp"
#include "qfilter/rng.hpp"

namespace qfilter {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Pure qubit state parametrized by polar angle theta and azimuth phi on the
/// Poincare sphere: cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
/// Angles are canonicalized at construction to theta in [0, pi] and
/// phi in [0, 2 pi); out-of-range inputs are folded onto the same physical
/// state (up to global phase), never silently mid-computation.
struct PureQubitState {
  PureQubitState(double theta_in, double phi_in);

  double theta;
  double phi;
};

/// Unit-norm amplitude vector. Construction normalizes; a vector with norm
/// below 1e-12 is rejected.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Complex& operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  /// <this|other>
  Complex inner(const StateVector& other) const;
  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  std::vector<Complex> amps_;
};

/// Hermitian, PSD (within clamping tolerance), unit-trace operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-10), positivity (eigenvalues >= -1e-10) and
  /// unit trace (1e-10); stores the Hermitized, exactly-renormalized matrix.
  static DensityMatrix from_matrix(ComplexMatrix m);
  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

StateVector to_vector(const PureQubitState& s);

/// sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>, orthogonal to to_vector(s).
StateVector orthogonal_partner(const PureQubitState& s);

/// Recovers canonical (theta, phi) from a qubit amplitude pair, fixing the
/// global phase so that the |0> amplitude is real non-negative.
PureQubitState angles_from_vector(const StateVector& v);

enum class PauliAxis { X, Y, Z };

ComplexMatrix pauli(PauliAxis axis);

Complex expectation(const ComplexMatrix& op, const StateVector& psi);
Complex expectation(const ComplexMatrix& op, const DensityMatrix& rho);

/// Haar-random pure state: 2*dim independent standard normals interpreted as
/// real/imaginary parts, then normalized.
StateVector haar_random_pure(int dim, Rng& rng);

/// Tr(rho^2), in [1/dim, 1].
double purity(const DensityMatrix& rho);

}  // namespace qfilter
