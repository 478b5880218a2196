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

#include "eehc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eehc {

arma::vec waterfill(const arma::vec& noise_over_gain, double budget) {
    if (noise_over_gain.n_elem == 0)
        throw std::invalid_argument("waterfill: empty level vector");
    if (!(budget > 0.0))
        throw std::invalid_argument("waterfill: budget must be positive");
    for (double n : noise_over_gain)
        if (std::isnan(n) || n < 0.0)
            throw std::invalid_argument("waterfill: levels must be non-negative");

    // Sort levels ascending; the water level over the m cheapest channels is
    // mu_m = (budget + sum of those levels) / m, feasible while mu_m exceeds
    // the m-th level. The largest feasible m gives the exact KKT solution.
    arma::uvec order = arma::stable_sort_index(noise_over_gain);
    arma::uword active = 0;
    double level_sum = 0.0, mu = 0.0;
    for (arma::uword m = 0; m < order.n_elem; ++m) {
        double n_m = noise_over_gain(order(m));
        if (std::isinf(n_m))
            break;
        double candidate = (budget + level_sum + n_m) / double(m + 1);
        if (candidate <= n_m)
            break;
        level_sum += n_m;
        mu = candidate;
        active = m + 1;
    }
    if (active == 0)
        throw std::invalid_argument("waterfill: no finite channel level");

    arma::vec p(noise_over_gain.n_elem, arma::fill::zeros);
    for (arma::uword m = 0; m < active; ++m)
        p(order(m)) = mu - noise_over_gain(order(m));
    return p;
}

BaselineResult full_digital_baseline(const ChannelRealization& c, int n_s, double sigma_n2,
                                     const PowerModel& pm) {
    if (n_s < 1 || arma::uword(n_s) > c.s.n_elem)
        throw std::invalid_argument("full_digital_baseline: invalid stream count");
    if (!(sigma_n2 > 0.0))
        throw std::invalid_argument("full_digital_baseline: noise variance must be positive");

    int n_r = int(c.h.n_rows);
    arma::vec levels;
    levels.set_size(arma::uword(n_s));
    for (int k = 0; k < n_s; ++k) {
        double lam2 = c.s(k) * c.s(k);
        levels(k) = lam2 > 0.0 ? sigma_n2 / lam2 : std::numeric_limits<double>::infinity();
    }
    arma::vec p = waterfill(levels, 1.0);

    double r = 0.0;
    for (int k = 0; k < n_s; ++k)
        if (p(k) > 0.0)
            r += std::log2(1.0 + p(k) / levels(k));

    BaselineResult out;
    out.label = "digital";
    out.combiner = optimal_combiner(c, n_s);
    out.eval.rate = r;
    out.eval.power = power(BitVector{std::vector<int>(size_t(n_r), 8)}, n_r, n_r, pm,
                           /*include_phase_shifters=*/false);
    out.eval.ee = energy_efficiency(out.eval.rate, out.eval.power);
    out.eval.se = r;
    out.eval.mse_db = mse_floor_db; // the combiner is W_opt itself
    return out;
}

BaselineResult fixed_bit_hybrid(const ChannelRealization& c, int b_fixed, int l_r, int n_s,
                                double sigma_n2, const AdmmConfig& cfg, const PowerModel& pm,
                                Rng& rng) {
    if (b_fixed < 1 || b_fixed > 8)
        throw std::invalid_argument("fixed_bit_hybrid: b_fixed must lie in [1, 8]");
    if (!(sigma_n2 > 0.0))
        throw std::invalid_argument("fixed_bit_hybrid: noise variance must be positive");

    ComplexMatrix w_opt = optimal_combiner(c, n_s);
    ComplexMatrix f = optimal_precoder(c, n_s);
    DistortionMatrix frozen = uniform_distortion(l_r, delta_of_bits(b_fixed));

    AdmmResult res = run_admm_frozen(w_opt, frozen, cfg, pm, rng);
    BitVector bits{std::vector<int>(size_t(l_r), b_fixed)};

    BaselineResult out;
    out.label = "hybrid" + std::to_string(b_fixed);
    out.hybrid = HybridCombiner{res.combiner.w_rf, frozen, res.combiner.w_bb, bits};
    out.combiner = hybrid_product(res.combiner.w_rf, frozen, res.combiner.w_bb);
    out.eval = evaluate_design(c.h, f, w_opt, res.combiner.w_rf, res.combiner.w_bb, bits,
                               sigma_n2, n_s, int(c.h.n_rows), pm,
                               /*include_phase_shifters=*/true);
    return out;
}

BaselineResult brute_force(const ChannelRealization& c, const BruteForceOptions& opt, int n_s,
                           double sigma_n2, const AdmmConfig& cfg, const PowerModel& pm,
                           Rng& rng) {
    cfg.validate();
    if (opt.l_r_max < n_s || n_s < 1)
        throw std::invalid_argument("brute_force: need n_s >= 1 and l_r_max >= n_s");
    if (!(sigma_n2 > 0.0))
        throw std::invalid_argument("brute_force: noise variance must be positive");

    std::vector<int> chain_counts;
    if (opt.search_l_r)
        for (int l = n_s; l <= opt.l_r_max; ++l)
            chain_counts.push_back(l);
    else
        chain_counts.push_back(opt.l_r_max);

    int m = cfg.bounds.b_max - cfg.bounds.b_min + 1;
    long double total = 0.0L;
    for (int l : chain_counts)
        total += opt.uniform_only ? (long double)m : std::pow((long double)m, l);
    if (total > (long double)opt.max_candidates)
        throw std::invalid_argument("brute_force: enumeration exceeds the candidate budget");

    ComplexMatrix w_opt = optimal_combiner(c, n_s);
    ComplexMatrix f = optimal_precoder(c, n_s);
    int n_r = int(c.h.n_rows);

    // Every candidate starts the frozen-distortion ADMM from the same seed, so
    // the argmax is a deterministic function of the channel and this seed.
    std::uint64_t base_seed = rng.raw();

    BaselineResult best;
    best.label = "bf";
    double best_ee = -std::numeric_limits<double>::infinity();

    auto consider = [&](int l_r, const std::vector<int>& bits_vec) {
        BitVector bits{bits_vec};
        DistortionMatrix frozen = make_distortion(bits);
        Rng cand_rng(base_seed);
        AdmmResult res = run_admm_frozen(w_opt, frozen, cfg, pm, cand_rng);
        Evaluation eval =
            evaluate_design(c.h, f, w_opt, res.combiner.w_rf, res.combiner.w_bb, bits, sigma_n2,
                            n_s, n_r, pm, /*include_phase_shifters=*/true);
        if (eval.ee > best_ee) {
            best_ee = eval.ee;
            best.hybrid = HybridCombiner{res.combiner.w_rf, frozen, res.combiner.w_bb, bits};
            best.combiner = hybrid_product(res.combiner.w_rf, frozen, res.combiner.w_bb);
            best.eval = eval;
        }
        (void)l_r;
    };

    for (int l_r : chain_counts) {
        if (opt.uniform_only) {
            for (int b = cfg.bounds.b_min; b <= cfg.bounds.b_max; ++b)
                consider(l_r, std::vector<int>(size_t(l_r), b));
            continue;
        }
        // Odometer enumeration, last chain fastest.
        std::vector<int> bits_vec(size_t(l_r), cfg.bounds.b_min);
        for (;;) {
            consider(l_r, bits_vec);
            int pos = l_r - 1;
            while (pos >= 0 && bits_vec[size_t(pos)] == cfg.bounds.b_max) {
                bits_vec[size_t(pos)] = cfg.bounds.b_min;
                --pos;
            }
            if (pos < 0)
                break;
            ++bits_vec[size_t(pos)];
        }
    }
    return best;
}

} // namespace eehc
