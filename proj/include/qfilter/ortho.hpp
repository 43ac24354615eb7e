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

#include <cstdint>
#include <functional>
#include <optional>

#include "qfilter/states.hpp"

namespace qfilter {

/// Non-unitary contraction (A - a*I)/lambda applied conditionally to
/// orthogonalize states with known mean value a = <A>. The stored operator
/// is normalized so its largest singular value is 1; `lambda` records the
/// normalization that was divided out.
struct QuantumFilter {
  ComplexMatrix op;
  double lambda = 0.0;
  Complex mean_value{0.0, 0.0};
  /// False when |mean_value| exceeds the largest singular value of the
  /// generating operator (the filter is still constructed).
  bool mean_within_range = true;
};

/// Physical decomposition of the qubit Z filter: attenuate the |0> amplitude
/// by tan^2(theta/2), then apply a pi phase shift to |1>. `waveplate_angle`
/// is the half-wave-plate setting with cos(2*angle) = tan(theta/2).
struct TwoStepDecomposition {
  double theta = 0.0;
  double attenuation = 0.0;     // tan^2(theta/2), multiplies the |0> amplitude
  double phase_shift = 0.0;     // pi
  double waveplate_angle = 0.0;

  /// diag(attenuation, e^{i*phase_shift}): attenuator followed by the phase.
  ComplexMatrix as_operator() const;
};

struct FilterResult {
  StateVector state;
  double p_success = 0.0;
};

/// Builds (a_op - mean*I)/lambda with lambda the largest singular value of
/// the difference. Throws if the difference vanishes (degenerate filter).
QuantumFilter build_filter(const ComplexMatrix& a_op, Complex mean);

/// The diagonal filter tan^2(theta/2)|0><0| - |1><1| for theta in (0, pi/2].
QuantumFilter z_filter(double theta);

/// Applies the filter and renormalizes; p_success is the squared norm of the
/// unnormalized output. Throws when the state is filtered to (near) zero.
FilterResult apply_filter(const QuantumFilter& f, const StateVector& psi);

TwoStepDecomposition two_step(double theta);

/// diag(1, 1, 1, -1) in the computational basis.
ComplexMatrix cz_gate();

/// CZ acting on the product of two pure qubit states.
StateVector prepare_entangled(const PureQubitState& s1, const PureQubitState& s2);

/// Local filtering Z(theta1) (x) I on a two-qubit state. When
/// `mean_tolerance` is given, <sigma_Z (x) I> is required to match
/// cos(theta1) within it; by default no check is performed so that
/// deliberately imperfect theta1 estimates can be injected.
FilterResult local_orthogonalize(const StateVector& psi, double theta1,
                                 std::optional<double> mean_tolerance = std::nullopt);

/// CZ followed by visibility-limited decoherence:
///   rho -> V * U rho U^dag + (1 - V) * D(U rho U^dag),
/// where D is the pinching over the blocks {|00>,|01>}, {|10>}, {|11>}. All
/// coherences of the |11> component vanish at V = 0; V = 1 is the ideal gate.
DensityMatrix apply_noisy_cz(const DensityMatrix& rho, double visibility);

/// The same channel as a callable, for Monte Carlo averaging.
std::function<DensityMatrix(const DensityMatrix&)> noisy_cz(double visibility);

/// (counts0 - counts1)/(counts0 + counts1) clamped to [0, 1] (northern
/// hemisphere convention). Throws when both counts are zero.
double estimate_mean_z(std::uint64_t counts0, std::uint64_t counts1);

}  // namespace qfilter
