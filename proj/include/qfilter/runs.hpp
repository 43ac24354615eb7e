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

#include "qfilter/bounds.hpp"
#include "qfilter/metrics.hpp"
#include "qfilter/ortho.hpp"
#include "qfilter/tomo.hpp"

namespace qfilter {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kOutputSchemaVersion = 1;

enum class MeanSource { Known, Measured };

std::string to_string(MeanSource source);

/// Simulated tomography of a known state: sample counts in the complete MUB
/// set and reconstruct by maximum likelihood.
DensityMatrix tomo_reconstruct(const DensityMatrix& truth, int qubits, std::uint64_t shots,
                               Rng& rng);

// ---------------------------------------------------------------------------
// single-qubit orthogonalization runs
// ---------------------------------------------------------------------------

struct SingleRunConfig {
  std::vector<double> thetas_deg{22.0, 44.0, 66.0, 88.0};
  std::vector<double> phis_deg{0.0, 90.0, 180.0, 270.0};
  std::uint64_t shots = 100000;
  double attenuation_error = 0.0;  // absolute offset on the attenuation factor
  MeanSource mean_source = MeanSource::Known;
  std::uint64_t seed = 1;
  bool dump_states = false;
};

struct SingleRow {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
  double overlap = 0.0;
  double purity_in = 0.0;
  double purity_out = 0.0;
  double p_success = 0.0;
};

struct SingleRunResult {
  std::vector<SingleRow> rows;
  nlohmann::json state_dumps;
};

SingleRunResult run_single(const SingleRunConfig& config);

// ---------------------------------------------------------------------------
// two-qubit runs
// ---------------------------------------------------------------------------

struct AngleQuadruple {
  double theta1_deg = 0.0;
  double phi1_deg = 0.0;
  double theta2_deg = 0.0;
  double phi2_deg = 0.0;
};

/// Default angle settings for the CZ-entangled runs.
std::vector<AngleQuadruple> default_two_qubit_angles();

struct TwoQubitRunConfig {
  std::vector<AngleQuadruple> angles = default_two_qubit_angles();
  std::uint64_t shots = 100000;
  double visibility = 1.0;
  std::uint64_t seed = 1;
  bool dump_states = false;
};

struct TwoQubitRow {
  AngleQuadruple angles;
  double overlap_known = 0.0;     // F
  double overlap_measured = 0.0;  // F'
  double purity_in = 0.0;
  double purity_out_known = 0.0;
  double purity_out_measured = 0.0;
  double ef_in = 0.0;
  double ef_out_known = 0.0;
  double ef_out_measured = 0.0;
};

struct TwoQubitRunResult {
  std::vector<TwoQubitRow> rows;
  nlohmann::json state_dumps;
};

TwoQubitRunResult run_two_qubit(const TwoQubitRunConfig& config);

// ---------------------------------------------------------------------------
// deterministic-bound sweep
// ---------------------------------------------------------------------------

struct BoundsRunConfig {
  double theta_step_deg = 5.0;
  int random_maps = 1000;
  int haar_samples = 100000;
  std::uint64_t seed = 1;
};

struct BoundsRow {
  double theta_deg = 0.0;
  double f_min_value = 0.0;
  double achieved_by_chi_opt = 0.0;
  double min_over_random_maps = 0.0;
  double certificate_min_eigenvalue = 0.0;
};

struct HaarBenchmarkRow {
  std::string channel;
  int dim = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double expected = 0.0;
};

struct BoundsRunResult {
  std::vector<BoundsRow> rows;
  std::vector<HaarBenchmarkRow> haar_rows;
};

BoundsRunResult run_bounds(const BoundsRunConfig& config);

// ---------------------------------------------------------------------------
// output writers (CSV + JSON metadata), byte-deterministic for fixed inputs
// ---------------------------------------------------------------------------

std::string format_double(double value);

std::string single_csv(const std::vector<SingleRow>& rows);
std::string two_qubit_csv(const std::vector<TwoQubitRow>& rows);
std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string haar_csv(const std::vector<HaarBenchmarkRow>& rows);

/// Writes `text` to `path` exactly as given.
void write_file(const std::string& path, const std::string& text);

/// Metadata JSON: schema version, command, seed and the flags that produced
/// the run. Contains no timestamps so reruns are byte-identical.
nlohmann::json run_metadata(const std::string& command, std::uint64_t seed,
                            const nlohmann::json& flags);

}  // namespace qfilter
