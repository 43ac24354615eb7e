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

#include <array>

#include "qfilter/states.hpp"

namespace qfilter {

/// Choi representation of a deterministic (trace-preserving, completely
/// positive) channel. Index convention: input-major ordering of the
/// input (x) output space, with transposition taken in the computational
/// basis, so the identity channel is the projector onto the unnormalized
/// maximally entangled vector sum_i |ii>.
class ChoiOperator {
 public:
  /// Validates positivity (eigenvalues >= -1e-10 after Hermitization) and
  /// the trace-preservation constraint Tr_out[chi] = I within 1e-10.
  static ChoiOperator make(int d_in, int d_out, ComplexMatrix matrix);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  ChoiOperator(int d_in, int d_out, ComplexMatrix m)
      : d_in_(d_in), d_out_(d_out), mat_(std::move(m)) {}

  int d_in_ = 0;
  int d_out_ = 0;
  ComplexMatrix mat_;
};

/// rho_out = Tr_in[(rho^T (x) I) chi].
DensityMatrix apply_choi(const ChoiOperator& chi, const DensityMatrix& rho);

ChoiOperator identity_choi(int dim);

/// Angle at which the optimal deterministic map switches from damping to the
/// plain sigma_Z rotation: 2*arcsin(1/sqrt(3)).
double theta_threshold();

/// Figure-of-merit operator: the average of psi^T (x) psi over the azimuth
/// at fixed polar angle theta.
ComplexMatrix r_theta(double theta);

/// F_theta = Tr[R_theta chi], the average input-output overlap of `chi` on
/// the fixed-theta input circle.
double average_overlap(const ChoiOperator& chi, double theta);

/// Damping parameter of the optimal map: sin^2(theta/2)/cos(theta) below the
/// threshold angle, 1 above it.
double a_opt(double theta);

/// The optimal deterministic map
/// (a|00> - |11>)(a<00| - <11|) + (1 - a^2)|01><01|.
ChoiOperator chi_opt(double theta);

/// Minimum average overlap achievable by deterministic maps at fixed theta.
double f_min(double theta);

struct Certificate {
  ComplexMatrix m;                     // R_theta - lambda (x) I
  std::array<double, 4> eigenvalues;   // ascending
  ComplexMatrix lambda_op;             // Tr_out[R_theta chi_opt]
};

/// Positivity certificate M >= 0 proving no trace-preserving map beats
/// f_min(theta). Tr[lambda_op] equals f_min(theta).
Certificate certificate_m(double theta);

/// Closed-form certificate eigenvalues (ascending), for cross-checking the
/// numerical decomposition.
std::array<double, 4> certificate_eigenvalues_closed_form(double theta);

/// Universal quantum inverter (d*I - rho)/(d^2 - 1).
DensityMatrix universal_inverter(const DensityMatrix& rho);

/// Choi operator of the universal inverter: (d*I (x) I - Phi)/(d^2 - 1).
ChoiOperator universal_inverter_choi(int dim);

/// Random CPTP map: Ginibre-sampled PSD matrix symmetrized to satisfy the
/// partial-trace constraint; resamples if the partial trace is singular.
ChoiOperator random_cptp(int d_in, int d_out, Rng& rng);

}  // namespace qfilter
