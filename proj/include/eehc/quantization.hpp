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

#ifndef eehc_quantization_H
#define eehc_quantization_H

#include <vector>

#include "eehc/numerics.hpp"

namespace eehc {

// pi*sqrt(3)/2, the constant of the additive-quantization-noise gain model
inline constexpr double aqnm_constant = 2.7206990463513265;

// Feasible per-ADC resolution range in bits.
struct QuantizationBounds {
    int b_min = 1;
    int b_max = 8;
};

// Integer sampling resolution of each ADC, one entry per RF chain.
struct BitVector {
    std::vector<int> bits;

    int size() const { return int(bits.size()); }
};

// Diagonal of the multiplicative distortion matrix, one gain per RF chain.
// Entries live in (0, 1); fractional resolutions are allowed, so the diagonal
// is continuous even though deployed ADCs end up on the integer-bit grid.
struct DistortionMatrix {
    arma::vec diag;

    int size() const { return int(diag.n_elem); }
};

// Multiplicative distortion gain delta(b) = sqrt(1 - (pi*sqrt(3)/2) * 2^(-2b)).
// Accepts fractional b; throws std::domain_error when the radicand is
// negative (b below ~0.722) or b < 0.
double delta_of_bits(double b);

// Inverse of delta_of_bits: b(d) = 0.5 * log2(pi*sqrt(3) / (2 (1 - d^2))).
// Requires d in (0, 1).
double bits_of_delta(double d);

// Continuous distortion snapped to the feasible integer-bit grid. Ties round
// half away from zero, results are clamped to [b_min, b_max].
BitVector round_bits(const DistortionMatrix& d, const QuantizationBounds& bounds);

// Diagonal additive quantization-noise covariance with entries
// (1 - k_i) * k_i, k_i = (pi*sqrt(3)/2) * 2^(-2 b_i).
ComplexMatrix quant_noise_cov(const BitVector& b);

// Distortion diagonal induced by an integer bit vector.
DistortionMatrix make_distortion(const BitVector& b);

// All RF chains at the same distortion value.
DistortionMatrix uniform_distortion(int l_r, double value);

// delta diagonal lifted to a complex L_R x L_R matrix (for products with
// complex combiner factors).
ComplexMatrix distortion_matrix(const DistortionMatrix& d);

// W_RF * diag(d) * W_BB, the effective hybrid combiner.
ComplexMatrix hybrid_product(const ComplexMatrix& w_rf, const DistortionMatrix& d,
                             const ComplexMatrix& w_bb);

} // namespace eehc

#endif
