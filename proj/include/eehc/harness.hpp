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

#ifndef eehc_harness_H
#define eehc_harness_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eehc/admm.hpp"
#include "eehc/channel.hpp"
#include "eehc/metrics.hpp"

namespace eehc {

enum class Scheme { admm, hybrid1, hybrid8, digital, bf };

std::string scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(const std::string& name);

// How the per-scheme EE aggregate is formed: mean of per-trial rate/power
// ratios, or ratio of the rate and power means.
enum class EeAggregation { mean_ratio, ratio_mean };

// The trade-off grid scanned when the per-trial gamma search is enabled.
inline constexpr std::array<double, 7> gamma_grid = {0.001, 0.00215, 0.00464, 0.01,
                                                     0.0215, 0.0464,  0.1};

struct ExperimentConfig {
    int n_tx = 32;
    int n_rx = 16;
    int l_r = 4;
    int n_s = 4;
    int n_cl = 2;
    int n_ray = 4;
    double snr_db = 20.0;
    double gamma = 0.01;
    double alpha = 1.0;
    int n_max = 40;
    int bf_n_max = 20; // reduced iteration count for brute-force candidates
    QuantizationBounds bounds{};
    PowerModel pm{};
    int trials = 200;
    std::uint64_t seed = 1;
    std::vector<Scheme> schemes = {Scheme::admm, Scheme::hybrid1, Scheme::hybrid8,
                                   Scheme::digital};
    bool gamma_search = false;
    EeAggregation ee_agg = EeAggregation::mean_ratio;

    void validate() const; // throws std::invalid_argument

    ChannelParams channel_params() const;
    AdmmConfig admm_config() const;
    double sigma_n2() const { return std::pow(10.0, -snr_db / 10.0); }
};

struct Aggregate {
    double mean = 0.0;
    double se = 0.0; // standard error of the mean
};

struct SchemeStats {
    Scheme scheme{};
    int trials = 0;
    Aggregate rate, power, ee, se, mse_db, bits;
};

// Monte-Carlo loop: per trial, one channel draw shared by every scheme and
// one scheme-independent solver seed, so comparisons are paired.
std::vector<SchemeStats> run_trials(const ExperimentConfig& cfg);

enum class SweepVariable { snr_db, n_rx, n_tx, gamma };

std::string sweep_variable_name(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(const std::string& name);

struct SweepSpec {
    SweepVariable variable{};
    std::vector<double> values;
};

struct SweepRow {
    std::string sweep_var;
    double sweep_value = 0.0;
    SchemeStats stats;
};

// One run_trials per sweep value, rows in the given order (schemes inner).
std::vector<SweepRow> sweep(const ExperimentConfig& base, const SweepSpec& spec);

// Rows for a single (non-swept) run, tagged sweep_var="none", value 0.
std::vector<SweepRow> as_rows(const std::vector<SchemeStats>& stats);

// CSV with the fixed column set; floats carry 6 significant digits.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& os);
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);

} // namespace eehc

#endif
