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

#include "qfilter/runs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qfilter {

namespace {

nlohmann::json matrix_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(nlohmann::json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

/// Filter implied by a mean value a = <sigma_Z>, with an absolute error on
/// the attenuation setting. Northern-hemisphere means attenuate |0> by
/// tan^2(theta/2); southern ones are the bit-flip reflection, attenuating
/// |1> by tan^2((pi - theta)/2) instead.
ComplexMatrix mean_filter(double a, double attenuation_error = 0.0) {
  ComplexMatrix f(2, 2);
  if (a >= 0.0) {
    f(0, 0) = Complex(clamp01((1.0 - a) / (1.0 + a) + attenuation_error), 0.0);
    f(1, 1) = Complex(-1.0, 0.0);
  } else {
    f(0, 0) = Complex(-1.0, 0.0);
    f(1, 1) = Complex(clamp01((1.0 + a) / (1.0 - a) + attenuation_error), 0.0);
  }
  return f;
}

struct FilteredState {
  DensityMatrix rho;
  double p_success;
};

FilteredState filter_density(const ComplexMatrix& filter, const DensityMatrix& rho) {
  const ComplexMatrix raw = matmul(matmul(filter, rho.matrix()), filter.adjoint());
  const double p = raw.trace().real();
  if (p < 1e-14) throw std::runtime_error("filter_density: state filtered to zero");
  return FilteredState{DensityMatrix::from_matrix(raw * Complex(1.0 / p, 0.0)), p};
}

}  // namespace

std::string to_string(MeanSource source) {
  return source == MeanSource::Known ? "known" : "measured";
}

DensityMatrix tomo_reconstruct(const DensityMatrix& truth, int qubits, std::uint64_t shots,
                               Rng& rng) {
  const std::vector<MeasurementBasis> bases = complete_bases(qubits);
  const std::vector<CountsRecord> records = simulate_counts(truth, bases, shots, rng);
  return mle_reconstruct(records, truth.dim()).rho;
}

SingleRunResult run_single(const SingleRunConfig& config) {
  if (config.thetas_deg.empty() || config.phis_deg.empty())
    throw std::invalid_argument("run_single: empty angle grid");
  Rng rng(config.seed);
  SingleRunResult result;
  result.state_dumps = nlohmann::json::array();

  for (double theta_deg : config.thetas_deg) {
    for (double phi_deg : config.phis_deg) {
      const PureQubitState input(deg_to_rad(theta_deg), deg_to_rad(phi_deg));
      const StateVector psi = to_vector(input);
      const DensityMatrix rho_in_true = DensityMatrix::from_pure(psi);
      const DensityMatrix rho_in_hat = tomo_reconstruct(rho_in_true, 1, config.shots, rng);

      double mean = std::cos(input.theta);
      if (config.mean_source == MeanSource::Measured) {
        const double p0 = clamp01(std::pow(std::cos(0.5 * input.theta), 2.0));
        const std::uint64_t c0 = sample_binomial(rng, config.shots, p0);
        mean = estimate_mean_z(c0, config.shots - c0);
      }
      const ComplexMatrix filter = mean_filter(mean, config.attenuation_error);

      const std::vector<Complex> raw = matvec(filter, psi.amplitudes());
      double p_true = 0.0;
      for (const Complex& amp : raw) p_true += std::norm(amp);
      if (p_true < 1e-14) throw std::runtime_error("run_single: state filtered to zero");
      const StateVector out(raw);
      const DensityMatrix rho_out_true = DensityMatrix::from_pure(out);
      const DensityMatrix rho_out_hat = tomo_reconstruct(rho_out_true, 1, config.shots, rng);

      // Coincidence-ratio estimate of the success probability.
      const std::uint64_t surviving = sample_binomial(rng, config.shots, clamp01(p_true));
      const double p_est = static_cast<double>(surviving) / static_cast<double>(config.shots);

      SingleRow row;
      row.theta_deg = theta_deg;
      row.phi_deg = phi_deg;
      row.overlap = fidelity(rho_in_hat, rho_out_hat);
      row.purity_in = purity(rho_in_hat);
      row.purity_out = purity(rho_out_hat);
      row.p_success = p_est;
      result.rows.push_back(row);

      if (config.dump_states) {
        result.state_dumps.push_back(
            {{"theta_deg", theta_deg},
             {"phi_deg", phi_deg},
             {"input_true", matrix_json(rho_in_true.matrix())},
             {"input_mle", matrix_json(rho_in_hat.matrix())},
             {"output_true", matrix_json(rho_out_true.matrix())},
             {"output_mle", matrix_json(rho_out_hat.matrix())}});
      }
    }
  }
  return result;
}

std::vector<AngleQuadruple> default_two_qubit_angles() {
  return {{45.0, 0.0, 90.0, 0.0},
          {67.5, 0.0, 90.0, 0.0},
          {45.0, 0.0, 45.0, 0.0},
          {67.5, 0.0, 45.0, 0.0},
          {67.5, 90.0, 45.0, 90.0}};
}

TwoQubitRunResult run_two_qubit(const TwoQubitRunConfig& config) {
  if (config.angles.empty()) throw std::invalid_argument("run_two_qubit: no angle settings");
  Rng rng(config.seed);
  TwoQubitRunResult result;
  result.state_dumps = nlohmann::json::array();

  for (const AngleQuadruple& q : config.angles) {
    const PureQubitState s1(deg_to_rad(q.theta1_deg), deg_to_rad(q.phi1_deg));
    const PureQubitState s2(deg_to_rad(q.theta2_deg), deg_to_rad(q.phi2_deg));
    std::vector<Complex> product(4);
    const StateVector v1 = to_vector(s1), v2 = to_vector(s2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) product[2 * i + j] = v1[i] * v2[j];
    const DensityMatrix rho_product = DensityMatrix::from_pure(StateVector(product));
    const DensityMatrix rho_in_true = apply_noisy_cz(rho_product, config.visibility);

    const DensityMatrix rho_in_hat = tomo_reconstruct(rho_in_true, 2, config.shots, rng);

    const double a_known = std::cos(s1.theta);
    const ComplexMatrix z0 = tensor(mub_basis(Mub::HV).projectors[0], ComplexMatrix::identity(2));
    const double p0 = clamp01(matmul(z0, rho_in_true.matrix()).trace().real());
    const std::uint64_t c0 = sample_binomial(rng, config.shots, p0);
    const double a_measured = estimate_mean_z(c0, config.shots - c0);

    TwoQubitRow row;
    row.angles = q;
    row.purity_in = purity(rho_in_hat);
    row.ef_in = entanglement_of_formation(rho_in_hat);

    nlohmann::json dump;
    if (config.dump_states) {
      dump = {{"theta1_deg", q.theta1_deg},
              {"phi1_deg", q.phi1_deg},
              {"theta2_deg", q.theta2_deg},
              {"phi2_deg", q.phi2_deg},
              {"input_true", matrix_json(rho_in_true.matrix())},
              {"input_mle", matrix_json(rho_in_hat.matrix())}};
    }

    for (MeanSource source : {MeanSource::Known, MeanSource::Measured}) {
      const double mean = source == MeanSource::Known ? a_known : a_measured;
      const ComplexMatrix filter = tensor(mean_filter(mean), ComplexMatrix::identity(2));
      const FilteredState filtered = filter_density(filter, rho_in_true);
      const DensityMatrix rho_out_hat = tomo_reconstruct(filtered.rho, 2, config.shots, rng);
      const double overlap = fidelity(rho_in_hat, rho_out_hat);
      if (source == MeanSource::Known) {
        row.overlap_known = overlap;
        row.purity_out_known = purity(rho_out_hat);
        row.ef_out_known = entanglement_of_formation(rho_out_hat);
        if (config.dump_states) dump["output_mle_known"] = matrix_json(rho_out_hat.matrix());
      } else {
        row.overlap_measured = overlap;
        row.purity_out_measured = purity(rho_out_hat);
        row.ef_out_measured = entanglement_of_formation(rho_out_hat);
        if (config.dump_states) dump["output_mle_measured"] = matrix_json(rho_out_hat.matrix());
      }
    }
    result.rows.push_back(row);
    if (config.dump_states) result.state_dumps.push_back(std::move(dump));
  }
  return result;
}

BoundsRunResult run_bounds(const BoundsRunConfig& config) {
  if (!(config.theta_step_deg > 0.0) || config.theta_step_deg > 90.0)
    throw std::invalid_argument("run_bounds: theta step must lie in (0, 90]");
  if (config.random_maps < 1 || config.haar_samples < 2)
    throw std::invalid_argument("run_bounds: bad sample counts");
  Rng rng(config.seed);

  std::vector<ChoiOperator> maps;
  maps.reserve(static_cast<std::size_t>(config.random_maps));
  for (int i = 0; i < config.random_maps; ++i) maps.push_back(random_cptp(2, 2, rng));

  BoundsRunResult result;
  for (double theta_deg = config.theta_step_deg; theta_deg < 90.0 + 1e-9;
       theta_deg += config.theta_step_deg) {
    const double theta = deg_to_rad(std::min(theta_deg, 90.0));
    BoundsRow row;
    row.theta_deg = theta_deg;
    row.f_min_value = f_min(theta);
    row.achieved_by_chi_opt = average_overlap(chi_opt(theta), theta);
    double best = 1.0;
    for (const ChoiOperator& chi : maps) best = std::min(best, average_overlap(chi, theta));
    row.min_over_random_maps = best;
    row.certificate_min_eigenvalue = certificate_m(theta).eigenvalues.front();
    result.rows.push_back(row);
  }

  for (int dim : {2, 3}) {
    const auto inverter = [](const DensityMatrix& rho) { return universal_inverter(rho); };
    const HaarAverage avg = haar_average_overlap(inverter, dim, config.haar_samples, rng);
    result.haar_rows.push_back(
        {"universal_inverter", dim, avg.mean, avg.std_error, 1.0 / (dim + 1.0)});
  }
  for (int dim : {2, 3}) {
    ComplexMatrix u(dim, dim);
    if (dim == 2) {
      u = pauli(PauliAxis::Z);
    } else {
      // diag(1, w, w^2) with w a primitive cube root of unity: traceless.
      for (int k = 0; k < 3; ++k)
        u(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
    }
    const auto channel = [&u](const DensityMatrix& rho) {
      return DensityMatrix::from_matrix(matmul(matmul(u, rho.matrix()), u.adjoint()));
    };
    const HaarAverage avg = haar_average_overlap(channel, dim, config.haar_samples, rng);
    result.haar_rows.push_back(
        {"traceless_unitary", dim, avg.mean, avg.std_error, 1.0 / (dim + 1.0)});
  }
  return result;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string single_csv(const std::vector<SingleRow>& rows) {
  std::string out = "theta,phi,overlap,purity_in,purity_out,p_success\n";
  for (const SingleRow& r : rows) {
    out += format_double(r.theta_deg) + "," + format_double(r.phi_deg) + "," +
           format_double(r.overlap) + "," + format_double(r.purity_in) + "," +
           format_double(r.purity_out) + "," + format_double(r.p_success) + "\n";
  }
  return out;
}

std::string two_qubit_csv(const std::vector<TwoQubitRow>& rows) {
  std::string out = "theta1,phi1,theta2,phi2,F,F_prime,P_I,P_O,P_O_prime,Ef_I,Ef_O,Ef_O_prime\n";
  for (const TwoQubitRow& r : rows) {
    out += format_double(r.angles.theta1_deg) + "," + format_double(r.angles.phi1_deg) + "," +
           format_double(r.angles.theta2_deg) + "," + format_double(r.angles.phi2_deg) + "," +
           format_double(r.overlap_known) + "," + format_double(r.overlap_measured) + "," +
           format_double(r.purity_in) + "," + format_double(r.purity_out_known) + "," +
           format_double(r.purity_out_measured) + "," + format_double(r.ef_in) + "," +
           format_double(r.ef_out_known) + "," + format_double(r.ef_out_measured) + "\n";
  }
  return out;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "theta,f_min,achieved_by_chi_opt,min_over_random_maps,certificate_min_eigenvalue\n";
  for (const BoundsRow& r : rows) {
    out += format_double(r.theta_deg) + "," + format_double(r.f_min_value) + "," +
           format_double(r.achieved_by_chi_opt) + "," + format_double(r.min_over_random_maps) +
           "," + format_double(r.certificate_min_eigenvalue) + "\n";
  }
  return out;
}

std::string haar_csv(const std::vector<HaarBenchmarkRow>& rows) {
  std::string out = "channel,dim,mean,std_error,expected\n";
  for (const HaarBenchmarkRow& r : rows) {
    out += r.channel + "," + std::to_string(r.dim) + "," + format_double(r.mean) + "," +
           format_double(r.std_error) + "," + format_double(r.expected) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("write_file: cannot open " + path);
  stream << text;
  if (!stream) throw std::runtime_error("write_file: failed writing " + path);
}

nlohmann::json run_metadata(const std::string& command, std::uint64_t seed,
                            const nlohmann::json& flags) {
  return nlohmann::json{{"schema_version", kOutputSchemaVersion},
                        {"library_version", kLibraryVersion},
                        {"command", command},
                        {"seed", seed},
                        {"flags", flags}};
}

}  // namespace qfilter
