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
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qfilter {

/// Seedable, reproducible PRNG used for every stochastic operation in the
/// library. The algorithm is fully specified so that number streams can be
/// regenerated outside this codebase:
///   - state: xoshiro256++ (Blackman/Vigna), seeded from a single 64-bit
///     value expanded with four rounds of splitmix64,
///   - uniform doubles: top 53 bits of the next output, giving [0, 1),
///   - normals: Box-Muller cosine branch, sqrt(-2 ln(1-u1)) * cos(2 pi u2),
///     one normal per pair of uniforms (the sine partner is discarded).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      // splitmix64
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal deviate.
  double next_normal() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps the log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
};

/// Number of successes in `trials` Bernoulli draws with probability `p`.
inline std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_binomial: p outside [0, 1]");
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (rng.next_double() < p) ++hits;
  }
  return hits;
}

/// Multinomial draw over `probs` (renormalized internally); the final bucket
/// absorbs any floating-point remainder of the CDF walk.
inline std::vector<std::uint64_t> sample_multinomial(Rng& rng, std::uint64_t trials,
                                                     const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("sample_multinomial: no outcomes");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= -1e-12)) throw std::invalid_argument("sample_multinomial: negative probability");
    total += std::max(p, 0.0);
  }
  if (total <= 0.0) throw std::invalid_argument("sample_multinomial: zero total probability");
  std::vector<std::uint64_t> counts(probs.size(), 0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const double u = rng.next_double() * total;
    double acc = 0.0;
    std::size_t outcome = probs.size() - 1;
    for (std::size_t j = 0; j + 1 < probs.size(); ++j) {
      acc += std::max(probs[j], 0.0);
      if (u < acc) {
        outcome = j;
        break;
      }
    }
    ++counts[outcome];
  }
  return counts;
}

}  // namespace qfilter
