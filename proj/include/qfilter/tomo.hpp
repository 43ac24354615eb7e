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
#include <string>
#include <vector>

#include <json.hpp>

#include "qfilter/states.hpp"

namespace qfilter {

/// Projective measurement basis. Single-qubit labels are the mutually
/// unbiased polarization bases HV, DA, RL; multi-qubit bases are tensor
/// products carrying one label per qubit.
struct MeasurementBasis {
  std::vector<std::string> labels;          // one per qubit
  std::vector<ComplexMatrix> projectors;    // rank-1, orthogonal, sum to I

  std::string display_label() const;
};

enum class Mub { HV, DA, RL };

MeasurementBasis mub_basis(Mub which);
MeasurementBasis tensor_basis(const MeasurementBasis& a, const MeasurementBasis& b);
MeasurementBasis basis_from_labels(const std::vector<std::string>& labels);

/// The 3 single-qubit bases, or all 3^k tensor products for k qubits.
std::vector<MeasurementBasis> complete_bases(int qubits);

/// Counts from repeated projective measurement in one basis.
struct CountsRecord {
  std::vector<std::string> basis;
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;
};

void to_json(nlohmann::json& j, const CountsRecord& r);
void from_json(const nlohmann::json& j, CountsRecord& r);

/// Multinomial sampling from the Born probabilities Tr[P_j rho], one record
/// per basis.
std::vector<CountsRecord> simulate_counts(const DensityMatrix& rho,
                                          const std::vector<MeasurementBasis>& bases,
                                          std::uint64_t shots_per_basis, Rng& rng);

struct MleResult {
  DensityMatrix rho;
  bool converged = false;
  int iterations = 0;
  double final_step = 0.0;              // trace distance of the last accepted step
  std::vector<double> log_likelihoods;  // one entry per accepted iteration
  std::string stop_reason;
};

/// Iterative maximum-likelihood reconstruction (R rho R fixed point, diluted
/// when a full step would decrease the likelihood). Requires a tomographically
/// complete record set: all 3 bases for one qubit, all 9 pairs for two.
MleResult mle_reconstruct(const std::vector<CountsRecord>& records, int dim);

}  // namespace qfilter
