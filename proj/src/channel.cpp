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

#include "eehc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace eehc {

namespace {

void validate(const ChannelParams& p) {
    if (p.n_tx < 1 || p.n_rx < 1 || p.n_clusters < 1 || p.n_rays < 1)
        throw std::invalid_argument("sample_channel: antenna/cluster/ray counts must be >= 1");
    if (!p.cluster_power.empty() && int(p.cluster_power.size()) != p.n_clusters)
        throw std::invalid_argument("sample_channel: cluster_power size must match n_clusters");
    for (double v : p.cluster_power)
        if (!(v > 0.0))
            throw std::invalid_argument("sample_channel: cluster powers must be positive");
    if (p.angle_spread < 0.0)
        throw std::invalid_argument("sample_channel: angle spread must be non-negative");
    if (!(p.element_spacing > 0.0))
        throw std::invalid_argument("sample_channel: element spacing must be positive");
}

} // namespace

arma::cx_vec array_response_ula(int n, double phi, double spacing) {
    arma::cx_vec a(n);
    double step = 2.0 * std::numbers::pi * spacing * std::sin(phi);
    double norm = 1.0 / std::sqrt(double(n));
    for (int k = 0; k < n; ++k)
        a(k) = std::polar(norm, step * double(k));
    return a;
}

ChannelRealization sample_channel(const ChannelParams& p, Rng& rng) {
    validate(p);

    ChannelRealization c;
    int n_paths = p.n_clusters * p.n_rays;
    c.gains.reserve(n_paths);
    c.aod.reserve(n_paths);
    c.aoa.reserve(n_paths);

    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < p.n_clusters; ++i) {
        double mean_aod = rng.uniform(0.0, two_pi);
        double mean_aoa = rng.uniform(0.0, two_pi);
        double var = p.cluster_power.empty() ? 1.0 : p.cluster_power[i];
        for (int l = 0; l < p.n_rays; ++l) {
            c.aod.push_back(mean_aod + rng.laplacian(p.angle_spread));
            c.aoa.push_back(mean_aoa + rng.laplacian(p.angle_spread));
            c.gains.push_back(rng.cgaussian(var));
        }
    }

    double scale = std::sqrt(double(p.n_tx) * double(p.n_rx) / double(n_paths));
    c.h.zeros(p.n_rx, p.n_tx);
    for (int k = 0; k < n_paths; ++k) {
        arma::cx_vec ar = array_response_ula(p.n_rx, c.aoa[k], p.element_spacing);
        arma::cx_vec at = array_response_ula(p.n_tx, c.aod[k], p.element_spacing);
        c.h += (scale * c.gains[k]) * (ar * at.t());
    }

    SvdResult f = svd(c.h);
    c.u = std::move(f.u);
    c.s = std::move(f.s);
    c.v = std::move(f.v);
    return c;
}

ComplexMatrix optimal_combiner(const ChannelRealization& c, int n_s) {
    if (n_s < 1 || arma::uword(n_s) > std::min(c.u.n_rows, c.v.n_rows))
        throw std::invalid_argument("optimal_combiner: stream count exceeds channel rank bound");
    return c.u.cols(0, n_s - 1);
}

ComplexMatrix optimal_precoder(const ChannelRealization& c, int n_s) {
    if (n_s < 1 || arma::uword(n_s) > std::min(c.u.n_rows, c.v.n_rows))
        throw std::invalid_argument("optimal_precoder: stream count exceeds channel rank bound");
    return c.v.cols(0, n_s - 1) / std::sqrt(double(n_s));
}

} // namespace eehc
