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

#ifndef eehc_baselines_H
#define eehc_baselines_H

#include <optional>
#include <string>

#include "eehc/admm.hpp"
#include "eehc/channel.hpp"
#include "eehc/metrics.hpp"

namespace eehc {

// One benchmark design evaluated on one channel. `combiner` always holds the
// effective N_R x N_s receive matrix; `hybrid` is set for factorized schemes.
struct BaselineResult {
    std::string label;
    std::optional<HybridCombiner> hybrid;
    ComplexMatrix combiner;
    Evaluation eval;
};

// Water-filling over parallel channels with per-channel noise-to-gain levels
// n_k: returns p_k = max(0, mu - n_k) with sum(p) = budget. Levels may be
// +inf (dead channels receive zero power).
arma::vec waterfill(const arma::vec& noise_over_gain, double budget);

// SVD receive combining with water-filled TX power over the top n_s modes;
// every RX antenna carries a full-resolution (8-bit) ADC pair and there is
// no phase-shifter network.
BaselineResult full_digital_baseline(const ChannelRealization& c, int n_s, double sigma_n2,
                                     const PowerModel& pm);

// Hybrid combiner with every ADC pinned at b_fixed bits: the ADMM loop runs
// with the distortion frozen at delta(b_fixed) I.
BaselineResult fixed_bit_hybrid(const ChannelRealization& c, int b_fixed, int l_r, int n_s,
                                double sigma_n2, const AdmmConfig& cfg, const PowerModel& pm,
                                Rng& rng);

struct BruteForceOptions {
    int l_r_max = 4;
    bool search_l_r = false;   // also sweep L_R over {n_s .. l_r_max}
    bool uniform_only = false; // equal bits on every chain only
    long long max_candidates = 1000000;
};

// Exhaustive search over per-ADC bit vectors (and optionally the RF chain
// count). Each candidate is designed by the frozen-distortion ADMM from an
// identical starting point, so the search is a deterministic argmax of EE
// over the enumerated set. Throws std::invalid_argument when the enumeration
// would exceed opt.max_candidates.
BaselineResult brute_force(const ChannelRealization& c, const BruteForceOptions& opt, int n_s,
                           double sigma_n2, const AdmmConfig& cfg, const PowerModel& pm, Rng& rng);

} // namespace eehc

#endif
