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

#include "eehc/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eehc {

double delta_of_bits(double b) {
    if (b < 0.0)
        throw std::domain_error("delta_of_bits: negative bit resolution");
    double k = aqnm_constant * std::exp2(-2.0 * b);
    if (k > 1.0)
        throw std::domain_error("delta_of_bits: resolution below the model's validity range");
    return std::sqrt(1.0 - k);
}

double bits_of_delta(double d) {
    if (!(d > 0.0 && d < 1.0))
        throw std::domain_error("bits_of_delta: distortion gain must lie in (0, 1)");
    return 0.5 * std::log2(aqnm_constant / (1.0 - d * d));
}

BitVector round_bits(const DistortionMatrix& d, const QuantizationBounds& bounds) {
    BitVector out;
    out.bits.reserve(d.diag.n_elem);
    for (double di : d.diag) {
        // Clamp the gain into the open interval first so that box-edge values
        // perturbed by roundoff still invert cleanly.
        double dc = std::clamp(di, 1e-12, 1.0 - 1e-15);
        int b = int(std::round(bits_of_delta(dc)));
        out.bits.push_back(std::clamp(b, bounds.b_min, bounds.b_max));
    }
    return out;
}

ComplexMatrix quant_noise_cov(const BitVector& b) {
    arma::vec entries(b.bits.size());
    for (size_t i = 0; i < b.bits.size(); ++i) {
        double k = aqnm_constant * std::exp2(-2.0 * b.bits[i]);
        entries(i) = (1.0 - k) * k;
    }
    return ComplexMatrix(arma::diagmat(entries), arma::mat(entries.n_elem, entries.n_elem, arma::fill::zeros));
}

DistortionMatrix make_distortion(const BitVector& b) {
    DistortionMatrix d;
    d.diag.set_size(b.bits.size());
    for (size_t i = 0; i < b.bits.size(); ++i)
        d.diag(i) = delta_of_bits(double(b.bits[i]));
    return d;
}

DistortionMatrix uniform_distortion(int l_r, double value) {
    DistortionMatrix d;
    d.diag = arma::vec(l_r, arma::fill::value(value));
    return d;
}

ComplexMatrix distortion_matrix(const DistortionMatrix& d) {
    return ComplexMatrix(arma::diagmat(d.diag), arma::mat(d.diag.n_elem, d.diag.n_elem, arma::fill::zeros));
}

ComplexMatrix hybrid_product(const ComplexMatrix& w_rf, const DistortionMatrix& d,
                             const ComplexMatrix& w_bb) {
    ComplexMatrix scaled = w_bb;
    scaled.each_col() %= arma::cx_vec(d.diag, arma::vec(d.diag.n_elem, arma::fill::zeros));
    return w_rf * scaled;
}

} // namespace eehc
