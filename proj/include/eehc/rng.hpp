// SPDX-License-Identifier: Apache-2.0
//
// eehc: mmWave MIMO receiver simulator with per-ADC resolution optimization
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef eehc_rng_H
#define eehc_rng_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace eehc {

// One splitmix64 scrambling round (Steele, Lea, Flood; public domain reference).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stable stream-seed derivation: same (seed, a, b) gives the same value on
// every platform and build.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

// Seeded random source with all variate transforms done in-house so that a
// fixed seed produces a bit-identical stream regardless of the standard
// library implementation. Each simulation unit (Monte-Carlo trial, solver
// instance) owns its own Rng.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Next raw engine word; handy for deriving child seeds.
    std::uint64_t raw() { return engine_(); }

    // Uniform on [0, 1)
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (cosine branch only)
    double gaussian() {
      double u1 = unit_open(), u2 = uniform();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    // Circularly symmetric complex normal with the given total variance
    std::complex<double> cgaussian(double variance) {
      double u1 = unit_open(), u2 = uniform();
      double r = std::sqrt(-std::log(u1) * variance);
      return {r * std::cos(two_pi * u2), r * std::sin(two_pi * u2)};
    }

    // Zero-mean Laplacian with scale parameter b (variance 2 b^2)
    double laplacian(double scale) {
      double u = (double(engine_() >> 12) + 0.5) * 0x1.0p-52; // (0, 1)
      return u < 0.5 ? scale * std::log(2.0 * u) : -scale * std::log(2.0 * (1.0 - u));
    }

  private:
    static constexpr double two_pi = 6.283185307179586476925286766559;

    // Uniform on (0, 1], safe as a log() argument
    double unit_open() { return (double(engine_() >> 11) + 1.0) * 0x1.0p-53; }

    std::mt19937_64 engine_;
};

} // namespace eehc

#endif
