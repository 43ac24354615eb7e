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

#include <functional>

#include "qfilter/states.hpp"

namespace qfilter {

/// Uhlmann fidelity [Tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2, in [0, 1].
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Two-qubit concurrence C = max(0, mu1 - mu2 - mu3 - mu4) from the
/// descending square roots of the eigenvalues of
/// rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
double concurrence(const DensityMatrix& rho);

/// E_f = h((1 + sqrt(1 - C^2))/2) with h the binary entropy.
double entanglement_of_formation(const DensityMatrix& rho);

/// -x log2 x - (1-x) log2(1-x), extended by continuity to x in {0, 1}.
double binary_entropy(double x);

/// Entanglement entropy of the pure CZ-prepared state:
/// h(x) with x = (1 + sqrt(1 - sin^2(theta1) sin^2(theta2)))/2.
double pure_entropy(double theta1, double theta2);

/// -Tr[rho log2 rho].
double von_neumann_entropy(const DensityMatrix& rho);

struct HaarAverage {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo average of the overlap <psi| E(|psi><psi|) |psi> over Haar
/// random pure inputs.
HaarAverage haar_average_overlap(const std::function<DensityMatrix(const DensityMatrix&)>& channel,
                                 int dim, int samples, Rng& rng);

/// Average state fidelity from process fidelity: (d*F_chi + 1)/(d + 1).
double process_to_average_fidelity(double f_chi, int dim);

}  // namespace qfilter
