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

#ifndef eehc_channel_H
#define eehc_channel_H

#include <numbers>
#include <vector>

#include "eehc/numerics.hpp"
#include "eehc/rng.hpp"

namespace eehc {

// Clustered narrowband channel parameters. Angles are azimuth-only (ULA
// geometry with ideal isotropic elements).
struct ChannelParams {
    int n_tx = 32;      // TX antennas
    int n_rx = 16;      // RX antennas
    int n_clusters = 2; // scattering clusters
    int n_rays = 4;     // rays per cluster

    // Average gain power per cluster; empty means 1.0 for every cluster.
    std::vector<double> cluster_power;

    // Laplacian scale of the in-cluster angle offsets, radians. The default
    // gives a 10 degree angular standard deviation (scale = std / sqrt(2)).
    double angle_spread = (10.0 * std::numbers::pi / 180.0) / std::numbers::sqrt2;

    // Antenna element spacing in wavelengths.
    double element_spacing = 0.5;
};

// One channel draw together with the path parameters that generated it and
// its cached SVD. Gains/angles are stored ray-major within each cluster
// (index = cluster * n_rays + ray).
struct ChannelRealization {
    ComplexMatrix h; // n_rx x n_tx
    std::vector<Complex> gains;
    std::vector<double> aod; // departure azimuth per path, radians
    std::vector<double> aoa; // arrival azimuth per path, radians

    ComplexMatrix u; // left singular basis of h (n_rx x n_rx)
    arma::vec s;     // singular values, decreasing
    ComplexMatrix v; // right singular basis of h (n_tx x n_tx)
};

// Normalized ULA steering vector: entry k = exp(j 2 pi d k sin(phi)) / sqrt(n).
arma::cx_vec array_response_ula(int n, double phi, double spacing);

// Draws gains and angles, assembles the channel matrix and caches its SVD.
// Cluster mean angles are uniform on [0, 2pi); ray offsets are Laplacian.
// Deterministic for a given rng state.
ChannelRealization sample_channel(const ChannelParams& p, Rng& rng);

// First n_s left singular vectors: the optimal fully digital combiner.
ComplexMatrix optimal_combiner(const ChannelRealization& c, int n_s);

// First n_s right singular vectors scaled by 1/sqrt(n_s), so the precoder
// carries unit total power.
ComplexMatrix optimal_precoder(const ChannelRealization& c, int n_s);

} // namespace eehc

#endif
