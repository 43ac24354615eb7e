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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qfilter/bounds.hpp"
#include "qfilter/metrics.hpp"
#include "qfilter/ortho.hpp"
#include "test_util.hpp"

using namespace qfilter;

namespace {

constexpr double kPi = std::numbers::pi;

// Average of psi^T (x) psi over the azimuth by periodic trapezoidal
// quadrature; the independent reference for r_theta.
ComplexMatrix r_theta_quadrature(double theta, int points) {
  ComplexMatrix acc(4, 4);
  for (int k = 0; k < points; ++k) {
    const double phi = 2.0 * kPi * k / points;
    const ComplexMatrix proj = to_vector(PureQubitState(theta, phi)).projector();
    acc += tensor(proj.transpose(), proj);
  }
  return acc * Complex(1.0 / points, 0.0);
}

// Closed form of the dual operator lambda on both branches.
ComplexMatrix lambda_closed_form(double theta) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  ComplexMatrix lambda(2, 2);
  if (theta <= theta_threshold()) {
    const double sin_theta = std::sin(theta);
    lambda(0, 0) = Complex(0.25 * sin_theta * sin_theta, 0.0);
    lambda(1, 1) = Complex(-std::pow(s, 6.0) / std::cos(theta), 0.0);
  } else {
    lambda(0, 0) = Complex(std::cos(theta) * c * c, 0.0);
    lambda(1, 1) = Complex(-std::cos(theta) * s * s, 0.0);
  }
  return lambda;
}

}  // namespace

TEST_CASE("identity choi acts as the identity channel") {
  Rng rng(601);
  const ChoiOperator id = identity_choi(2);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = qftest::random_density(rng, 2);
    CHECK(qftest::max_abs_diff(apply_choi(id, rho).matrix(), rho.matrix()) < 1e-12);
  }
}

TEST_CASE("choi validation rejects bad operators") {
  // wrong partial trace
  ComplexMatrix bad = ComplexMatrix::identity(4) * 0.7;
  CHECK_THROWS_AS(ChoiOperator::make(2, 2, bad), std::invalid_argument);
  // negative eigenvalue
  ComplexMatrix negative = ComplexMatrix::identity(4);
  negative(3, 3) = Complex(-1.0, 0.0);
  CHECK_THROWS_AS(ChoiOperator::make(2, 2, negative), std::invalid_argument);
}

TEST_CASE("r_theta closed form") {
  // theta = 0: projector onto |00>
  const ComplexMatrix pole = r_theta(0.0);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = Complex(1.0, 0.0);
  CHECK(qftest::max_abs_diff(pole, expected) < 1e-15);

  // quadrature oracle at theta = 50 deg
  const double theta = deg_to_rad(50.0);
  CHECK(qftest::max_abs_diff(r_theta(theta), r_theta_quadrature(theta, 10000)) < 1e-10);

  // the identity channel has unit average self-overlap at every theta
  for (double theta_deg : {10.0, 35.0, 60.0, 90.0})
    CHECK(average_overlap(identity_choi(2), deg_to_rad(theta_deg)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("average_overlap equals the Monte Carlo azimuth average") {
  Rng rng(602);
  const double theta = deg_to_rad(50.0);
  const ChoiOperator chi = random_cptp(2, 2, rng);
  const double exact = average_overlap(chi, theta);

  const int n = 4000;
  double mean = 0.0, m2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const StateVector psi = to_vector(PureQubitState(theta, 2.0 * kPi * rng.next_double()));
    const DensityMatrix out = apply_choi(chi, DensityMatrix::from_pure(psi));
    const double f = expectation(out.matrix(), psi).real();
    const double delta = f - mean;
    mean += delta / (k + 1);
    m2 += delta * (f - mean);
  }
  const double std_error = std::sqrt(m2 / (n - 1) / n);
  CHECK(std::abs(mean - exact) < std::max(3.0 * std_error, 1e-12));
}

TEST_CASE("chi_opt structure and branches") {
  // equator: the unitary sigma_Z
  const ChoiOperator equator = chi_opt(kPi / 2.0);
  ComplexMatrix sz_choi(4, 4);
  sz_choi(0, 0) = Complex(1.0, 0.0);
  sz_choi(3, 3) = Complex(1.0, 0.0);
  sz_choi(0, 3) = Complex(-1.0, 0.0);
  sz_choi(3, 0) = Complex(-1.0, 0.0);
  CHECK(qftest::max_abs_diff(equator.matrix(), sz_choi) < 1e-12);

  // branch continuity at the threshold
  const double theta_t = theta_threshold();
  const double s = std::sin(0.5 * theta_t);
  CHECK(s * s / std::cos(theta_t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a_opt(theta_t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a_opt(theta_t + 1e-9) == doctest::Approx(1.0));

  // a(30 deg) = sin^2(15)/cos(30)
  CHECK(a_opt(deg_to_rad(30.0)) == doctest::Approx(0.0773503).epsilon(1e-5));

  // trace-preservation constraint holds exactly
  for (double theta_deg : {10.0, 30.0, 60.0, 80.0, 90.0}) {
    const ChoiOperator chi = chi_opt(deg_to_rad(theta_deg));
    const ComplexMatrix reduced = partial_trace(chi.matrix(), 2, 2, Subsystem::First);
    CHECK(qftest::max_abs_diff(reduced, ComplexMatrix::identity(2)) < 1e-12);
    CHECK(chi.matrix().is_psd(1e-12));
  }
}

TEST_CASE("chi_opt at the equator orthogonalizes equator states") {
  const ChoiOperator chi = chi_opt(kPi / 2.0);
  const PureQubitState s(kPi / 2.0, 0.0);
  const DensityMatrix out = apply_choi(chi, DensityMatrix::from_pure(to_vector(s)));
  CHECK(fidelity(out, DensityMatrix::from_pure(to_vector(s))) < 1e-12);
}

TEST_CASE("f_min values and continuity") {
  CHECK(f_min(kPi / 2.0) < 1e-12);
  CHECK(f_min(0.0) == doctest::Approx(0.0));
  CHECK(f_min(theta_threshold()) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(f_min(deg_to_rad(88.0)) ==
        doctest::Approx(std::pow(std::cos(deg_to_rad(88.0)), 2.0)).epsilon(1e-12));

  // continuity across the threshold
  const double theta_t = theta_threshold();
  CHECK(std::abs(f_min(theta_t - 1e-8) - f_min(theta_t + 1e-8)) < 1e-7);

  // frozen value at 45 deg, cross-checked against Tr[R chi_opt]
  CHECK(f_min(deg_to_rad(45.0)) == doctest::Approx(0.120558261758).epsilon(1e-9));
  for (double theta_deg = 5.0; theta_deg <= 90.0; theta_deg += 5.0) {
    const double theta = deg_to_rad(theta_deg);
    CHECK(std::abs(average_overlap(chi_opt(theta), theta) - f_min(theta)) < 1e-10);
  }
}

TEST_CASE("certificate eigenvalues match the closed forms") {
  // first branch
  {
    const double theta = deg_to_rad(45.0);
    const Certificate cert = certificate_m(theta);
    const auto expected = certificate_eigenvalues_closed_form(theta);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(cert.eigenvalues[i] - expected[i]) < 1e-10);
  }
  // second branch
  {
    const double theta = deg_to_rad(80.0);
    const Certificate cert = certificate_m(theta);
    const auto expected = certificate_eigenvalues_closed_form(theta);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(cert.eigenvalues[i] - expected[i]) < 1e-10);
      CHECK(expected[i] >= 0.0);
    }
  }
  // equator: the nonzero pair contains 2 c^2 s^2 = 1/2
  {
    const Certificate cert = certificate_m(kPi / 2.0);
    CHECK(cert.eigenvalues[3] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("certificate is positive semidefinite with Tr[lambda] = f_min") {
  for (double theta_deg = 5.0; theta_deg <= 90.0; theta_deg += 5.0) {
    const double theta = deg_to_rad(theta_deg);
    const Certificate cert = certificate_m(theta);
    CHECK(cert.eigenvalues.front() >= -1e-10);
    CHECK(std::abs(cert.lambda_op.trace().real() - f_min(theta)) < 1e-10);
    // below the threshold angle two eigenvalues vanish, above it one does
    CHECK(std::abs(cert.eigenvalues[0]) < 1e-10);
    if (theta <= theta_threshold()) CHECK(std::abs(cert.eigenvalues[1]) < 1e-10);
    // lambda matches its closed form
    CHECK(qftest::max_abs_diff(cert.lambda_op, lambda_closed_form(theta)) < 1e-10);
  }
}

TEST_CASE("duality identity for trace-preserving maps") {
  Rng rng(603);
  for (int trial = 0; trial < 20; ++trial) {
    const ChoiOperator chi = random_cptp(2, 2, rng);
    for (double theta_deg : {15.0, 45.0, 75.0}) {
      const double theta = deg_to_rad(theta_deg);
      const Certificate cert = certificate_m(theta);
      const double lhs = matmul(cert.m, chi.matrix()).trace().real();
      const double rhs = average_overlap(chi, theta) - f_min(theta);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("universal inverter") {
  const DensityMatrix zero = DensityMatrix::from_pure(to_vector(PureQubitState(0.0, 0.0)));
  const DensityMatrix inverted = universal_inverter(zero);
  CHECK(inverted.matrix()(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(inverted.matrix()(1, 1).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(fidelity(zero, inverted) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  // maximally mixed fixed point
  for (int d : {2, 3, 4}) {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(d);
    CHECK(qftest::max_abs_diff(universal_inverter(mixed).matrix(), mixed.matrix()) < 1e-13);
  }

  // overlap 1/(d+1) for pure states in d = 3
  Rng rng(604);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = haar_random_pure(3, rng);
    const DensityMatrix out = universal_inverter(DensityMatrix::from_pure(psi));
    CHECK(std::abs(expectation(out.matrix(), psi).real() - 0.25) < 1e-10);
  }
}

TEST_CASE("universal inverter choi agrees with the direct map") {
  Rng rng(605);
  for (int d : {2, 3}) {
    const ChoiOperator chi = universal_inverter_choi(d);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(d);
    CHECK(qftest::max_abs_diff(apply_choi(chi, mixed).matrix(), mixed.matrix()) < 1e-12);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = qftest::random_density(rng, d);
      CHECK(qftest::max_abs_diff(apply_choi(chi, rho).matrix(),
                                 universal_inverter(rho).matrix()) < 1e-11);
    }
  }
}

TEST_CASE("random cptp maps satisfy the choi invariants") {
  Rng rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const ChoiOperator chi = random_cptp(2, 2, rng);
    const ComplexMatrix reduced = partial_trace(chi.matrix(), 2, 2, Subsystem::First);
    CHECK(qftest::max_abs_diff(reduced, ComplexMatrix::identity(2)) < 1e-9);
    CHECK(hermitian_eig(chi.matrix()).eigenvalues.front() >= -1e-9);
  }

  // trace preservation through apply_choi
  for (int trial = 0; trial < 20; ++trial) {
    const ChoiOperator chi = random_cptp(2, 2, rng);
    const DensityMatrix rho = qftest::random_density(rng, 2);
    CHECK(apply_choi(chi, rho).matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("no random map beats f_min") {
  Rng rng(607);
  for (int trial = 0; trial < 100; ++trial) {
    const ChoiOperator chi = random_cptp(2, 2, rng);
    for (double theta_deg = 5.0; theta_deg <= 85.0; theta_deg += 10.0) {
      const double theta = deg_to_rad(theta_deg);
      CHECK(average_overlap(chi, theta) >= f_min(theta) - 1e-9);
    }
  }
}

TEST_CASE("bit-flip symmetry extends the optimum past the equator") {
  const ComplexMatrix xx = tensor(pauli(PauliAxis::X), pauli(PauliAxis::X));
  for (double theta_deg : {100.0, 120.0, 150.0}) {
    const double theta = deg_to_rad(theta_deg);
    const ChoiOperator mirrored = chi_opt(kPi - theta);
    const ComplexMatrix flipped = matmul(matmul(xx, mirrored.matrix()), xx);
    // R_theta extends verbatim above the equator
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    ComplexMatrix r(4, 4);
    r(0, 0) = Complex(std::pow(c, 4.0), 0.0);
    r(1, 1) = r(2, 2) = Complex(c * c * s * s, 0.0);
    r(3, 3) = Complex(std::pow(s, 4.0), 0.0);
    r(0, 3) = r(3, 0) = Complex(c * c * s * s, 0.0);
    const double achieved = matmul(r, flipped).trace().real();
    CHECK(std::abs(achieved - f_min(kPi - theta)) < 1e-10);
  }
}
