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

#include "qfilter/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qfilter {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

StateVector basis_ket(Mub which, int outcome) {
  switch (which) {
    case Mub::HV:
      return StateVector(outcome == 0 ? std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}}
                                      : std::vector<Complex>{{0.0, 0.0}, {1.0, 0.0}});
    case Mub::DA:
      return StateVector(outcome == 0
                             ? std::vector<Complex>{{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}}
                             : std::vector<Complex>{{kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0}});
    case Mub::RL:
      return StateVector(outcome == 0
                             ? std::vector<Complex>{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}}
                             : std::vector<Complex>{{kInvSqrt2, 0.0}, {0.0, -kInvSqrt2}});
  }
  throw std::invalid_argument("basis_ket: unknown basis");
}

Mub mub_from_label(const std::string& label) {
  if (label == "HV") return Mub::HV;
  if (label == "DA") return Mub::DA;
  if (label == "RL") return Mub::RL;
  throw std::invalid_argument("unknown measurement basis label: " + label);
}

int qubits_for_dim(int dim) {
  int qubits = 0;
  int d = 1;
  while (d < dim) {
    d *= 2;
    ++qubits;
  }
  if (d != dim || qubits < 1)
    throw std::invalid_argument("tomography supports only power-of-two dimensions >= 2");
  return qubits;
}

double log_likelihood(const std::vector<CountsRecord>& records,
                      const std::vector<std::vector<ComplexMatrix>>& projectors,
                      const ComplexMatrix& rho) {
  double ll = 0.0;
  for (std::size_t r = 0; r < records.size(); ++r) {
    for (std::size_t j = 0; j < records[r].counts.size(); ++j) {
      const std::uint64_t n = records[r].counts[j];
      if (n == 0) continue;
      double p = matmul(projectors[r][j], rho).trace().real();
      p = std::max(p, 1e-300);
      ll += static_cast<double>(n) * std::log(p);
    }
  }
  return ll;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const HermitianEig eig = hermitian_eig(a - b);
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::abs(lambda);
  return 0.5 * sum;
}

ComplexMatrix normalized(ComplexMatrix m) {
  const double tr = m.trace().real();
  if (!(tr > 1e-300)) return m;  // caller's likelihood check rejects this
  m *= Complex(1.0 / tr, 0.0);
  return m;
}

}  // namespace

std::string MeasurementBasis::display_label() const {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += "x";
    out += labels[i];
  }
  return out;
}

MeasurementBasis mub_basis(Mub which) {
  MeasurementBasis b;
  switch (which) {
    case Mub::HV: b.labels = {"HV"}; break;
    case Mub::DA: b.labels = {"DA"}; break;
    case Mub::RL: b.labels = {"RL"}; break;
  }
  b.projectors = {basis_ket(which, 0).projector(), basis_ket(which, 1).projector()};
  return b;
}

MeasurementBasis tensor_basis(const MeasurementBasis& a, const MeasurementBasis& b) {
  MeasurementBasis out;
  out.labels = a.labels;
  out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
  for (const ComplexMatrix& pa : a.projectors)
    for (const ComplexMatrix& pb : b.projectors) out.projectors.push_back(tensor(pa, pb));
  return out;
}

MeasurementBasis basis_from_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw std::invalid_argument("basis_from_labels: no labels");
  MeasurementBasis b = mub_basis(mub_from_label(labels[0]));
  for (std::size_t i = 1; i < labels.size(); ++i)
    b = tensor_basis(b, mub_basis(mub_from_label(labels[i])));
  return b;
}

std::vector<MeasurementBasis> complete_bases(int qubits) {
  if (qubits < 1) throw std::invalid_argument("complete_bases: qubits must be >= 1");
  std::vector<MeasurementBasis> bases = {mub_basis(Mub::HV), mub_basis(Mub::DA),
                                         mub_basis(Mub::RL)};
  for (int q = 1; q < qubits; ++q) {
    std::vector<MeasurementBasis> next;
    for (const MeasurementBasis& left : bases)
      for (Mub m : {Mub::HV, Mub::DA, Mub::RL}) next.push_back(tensor_basis(left, mub_basis(m)));
    bases = std::move(next);
  }
  return bases;
}

void to_json(nlohmann::json& j, const CountsRecord& r) {
  j = nlohmann::json{{"basis", r.basis}, {"counts", r.counts}, {"shots", r.shots}};
}

void from_json(const nlohmann::json& j, CountsRecord& r) {
  if (j.at("basis").is_string()) {
    r.basis = {j.at("basis").get<std::string>()};
  } else {
    r.basis = j.at("basis").get<std::vector<std::string>>();
  }
  r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
  r.shots = j.at("shots").get<std::uint64_t>();
  std::uint64_t total = 0;
  for (std::uint64_t c : r.counts) total += c;
  if (total != r.shots)
    throw std::invalid_argument("CountsRecord: counts do not sum to shots");
}

std::vector<CountsRecord> simulate_counts(const DensityMatrix& rho,
                                          const std::vector<MeasurementBasis>& bases,
                                          std::uint64_t shots_per_basis, Rng& rng) {
  if (shots_per_basis == 0) throw std::invalid_argument("simulate_counts: shots must be positive");
  std::vector<CountsRecord> records;
  records.reserve(bases.size());
  for (const MeasurementBasis& basis : bases) {
    std::vector<double> probs;
    probs.reserve(basis.projectors.size());
    for (const ComplexMatrix& proj : basis.projectors) {
      if (proj.rows() != rho.dim())
        throw std::invalid_argument("simulate_counts: basis dimension mismatch");
      probs.push_back(std::max(0.0, matmul(proj, rho.matrix()).trace().real()));
    }
    CountsRecord record;
    record.basis = basis.labels;
    record.counts = sample_multinomial(rng, shots_per_basis, probs);
    record.shots = shots_per_basis;
    records.push_back(std::move(record));
  }
  return records;
}

MleResult mle_reconstruct(const std::vector<CountsRecord>& records, int dim) {
  const int qubits = qubits_for_dim(dim);
  if (records.empty()) throw std::invalid_argument("mle_reconstruct: no records");

  // Completeness: every MUB label combination must be present.
  std::set<std::vector<std::string>> seen;
  for (const CountsRecord& r : records) {
    if (static_cast<int>(r.basis.size()) != qubits)
      throw std::invalid_argument("mle_reconstruct: record qubit count does not match dim");
    seen.insert(r.basis);
  }
  const std::vector<MeasurementBasis> all = complete_bases(qubits);
  for (const MeasurementBasis& b : all) {
    if (!seen.count(b.labels))
      throw std::invalid_argument("mle_reconstruct: tomographically incomplete basis set (missing " +
                                  b.display_label() + ")");
  }

  std::vector<std::vector<ComplexMatrix>> projectors;
  std::uint64_t total_shots = 0;
  for (const CountsRecord& r : records) {
    const MeasurementBasis basis = basis_from_labels(r.basis);
    if (r.counts.size() != basis.projectors.size())
      throw std::invalid_argument("mle_reconstruct: counts length does not match basis outcomes");
    std::uint64_t sum = 0;
    for (std::uint64_t c : r.counts) sum += c;
    if (sum != r.shots) throw std::invalid_argument("mle_reconstruct: counts do not sum to shots");
    total_shots += r.shots;
    projectors.push_back(basis.projectors);
  }
  if (total_shots == 0) throw std::invalid_argument("mle_reconstruct: zero total counts");

  const auto build_r = [&](const ComplexMatrix& rho) {
    ComplexMatrix r_op(dim, dim);
    for (std::size_t r = 0; r < records.size(); ++r) {
      for (std::size_t j = 0; j < records[r].counts.size(); ++j) {
        const std::uint64_t n = records[r].counts[j];
        if (n == 0) continue;
        const double f = static_cast<double>(n) / static_cast<double>(total_shots);
        double p = matmul(projectors[r][j], rho).trace().real();
        if (p < 1e-12) p = 1e-12;  // guard against division blow-up
        r_op += projectors[r][j] * Complex(f / p, 0.0);
      }
    }
    return r_op;
  };

  constexpr int kMaxIterations = 5000;
  constexpr double kStepTol = 1e-10;

  ComplexMatrix rho = ComplexMatrix::identity(dim) * Complex(1.0 / dim, 0.0);
  double ll = log_likelihood(records, projectors, rho);

  MleResult result{DensityMatrix::maximally_mixed(dim), false, 0, 0.0, {}, {}};
  result.log_likelihoods.push_back(ll);

  int iter = 0;
  std::string stop = "max iterations reached";
  bool converged = false;
  double last_step = 0.0;
  int stalled = 0;  // consecutive iterations with zero likelihood gain
  while (iter < kMaxIterations) {
    const ComplexMatrix r_op = build_r(rho);

    // Powers of R (normalized so the largest eigenvalue is 1) for the
    // exponent line search below; plain R rho R slows to O(1/k) near pure
    // states, powering R is the standard remedy.
    const HermitianEig r_eig = hermitian_eig(r_op);
    const double r_max = std::max(r_eig.eigenvalues.back(), 1e-300);
    const auto powered_update = [&](double alpha) {
      ComplexMatrix powered(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          Complex sum(0.0, 0.0);
          for (int k = 0; k < dim; ++k) {
            const double scaled = std::max(r_eig.eigenvalues[k], 0.0) / r_max;
            sum += r_eig.eigenvectors(r, k) * std::pow(scaled, alpha) *
                   std::conj(r_eig.eigenvectors(c, k));
          }
          powered(r, c) = sum;
        }
      return normalized(matmul(matmul(powered, rho), powered));
    };

    const ComplexMatrix update = powered_update(1.0);
    ComplexMatrix candidate = update;
    double candidate_ll = log_likelihood(records, projectors, candidate);

    if (std::isfinite(candidate_ll) && candidate_ll >= ll) {
      // Accelerate: double the exponent while the likelihood keeps rising.
      for (double alpha = 2.0; alpha <= 4096.0; alpha *= 2.0) {
        const ComplexMatrix faster = powered_update(alpha);
        const double faster_ll = log_likelihood(records, projectors, faster);
        if (!(faster_ll > candidate_ll)) break;
        candidate = faster;
        candidate_ll = faster_ll;
      }
    } else {
      // Dilute toward the current iterate; the log-likelihood is concave, so
      // some convex combination improves unless we are at the optimum.
      double epsilon = 1.0;
      while (!(candidate_ll >= ll) && epsilon > 1e-6) {
        epsilon *= 0.5;
        candidate = normalized(rho * Complex(1.0 - epsilon, 0.0) + update * Complex(epsilon, 0.0));
        candidate_ll = log_likelihood(records, projectors, candidate);
      }
      if (!(candidate_ll >= ll)) {
        stop = "likelihood stationary at floating-point resolution";
        converged = true;
        break;
      }
    }

    last_step = trace_distance(candidate, rho);
    stalled = candidate_ll > ll ? 0 : stalled + 1;
    rho = candidate;
    ll = candidate_ll;
    ++iter;
    result.log_likelihoods.push_back(ll);
    if (last_step < kStepTol) {
      stop = "step below tolerance";
      converged = true;
      break;
    }
    if (stalled >= 3) {
      stop = "likelihood stationary at floating-point resolution";
      converged = true;
      break;
    }
  }

  result.rho = DensityMatrix::from_matrix(rho);
  result.converged = converged;
  result.iterations = iter;
  result.final_step = last_step;
  result.stop_reason = stop;
  return result;
}

}  // namespace qfilter
