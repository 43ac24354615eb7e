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

#include <cmath>
#include <vector>

#include "qfilter/complex_matrix.hpp"
#include "qfilter/rng.hpp"
#include "qfilter/states.hpp"

namespace qftest {

using qfilter::Complex;
using qfilter::ComplexMatrix;
using qfilter::DensityMatrix;
using qfilter::Rng;

inline ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(rng.next_normal(), rng.next_normal());
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, int n) {
  const ComplexMatrix g = random_matrix(rng, n, n);
  return (g + g.adjoint()) * 0.5;
}

inline ComplexMatrix random_psd(Rng& rng, int n) {
  const ComplexMatrix g = random_matrix(rng, n, n);
  return g * g.adjoint();
}

inline ComplexMatrix random_unitary(Rng& rng, int n) {
  return qfilter::hermitian_eig(random_hermitian(rng, n)).eigenvectors;
}

inline DensityMatrix random_density(Rng& rng, int n) {
  ComplexMatrix m = random_psd(rng, n);
  m *= Complex(1.0 / m.trace().real(), 0.0);
  return DensityMatrix::from_matrix(std::move(m));
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

}  // namespace qftest
