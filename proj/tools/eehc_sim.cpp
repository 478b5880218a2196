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
//
// eehc-sim: seeded Monte-Carlo experiment driver. Emits one CSV row per
// (scheme, sweep value) pair to stdout or --out.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eehc/harness.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_config = 2;
constexpr int exit_runtime_error = 3;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eehc-sim: energy-efficiency simulator for mmWave hybrid receivers "
                 "with per-ADC bit allocation"};
    app.option_defaults()->always_capture_default();

    eehc::ExperimentConfig cfg;
    std::vector<std::string> scheme_names;
    std::string sweep_var, ee_agg = "mean-ratio", out_path;
    std::vector<double> sweep_values;

    app.add_option("--ntx", cfg.n_tx, "TX antennas");
    app.add_option("--nrx", cfg.n_rx, "RX antennas");
    app.add_option("--lr", cfg.l_r, "RF chains");
    app.add_option("--ns", cfg.n_s, "Data streams");
    app.add_option("--ncl", cfg.n_cl, "Scattering clusters");
    app.add_option("--nray", cfg.n_ray, "Rays per cluster");
    app.add_option("--snr-db", cfg.snr_db, "SNR in dB (noise variance = 10^(-SNR/10))");
    app.add_option("--gamma", cfg.gamma, "Rate/power trade-off weight");
    app.add_option("--alpha", cfg.alpha, "ADMM penalty parameter");
    app.add_option("--nmax", cfg.n_max, "ADMM iterations");
    app.add_option("--bmin", cfg.bounds.b_min, "Minimum ADC bits");
    app.add_option("--bmax", cfg.bounds.b_max, "Maximum ADC bits");
    app.add_option("--trials", cfg.trials, "Monte-Carlo trials");
    app.add_option("--seed", cfg.seed, "Master seed (environment variable SEED overrides)");
    app.add_option("--schemes", scheme_names,
                   "Comma list from {admm,hybrid1,hybrid8,digital,bf}")
        ->delimiter(',');
    app.add_option("--sweep", sweep_var, "Sweep variable")
        ->check(CLI::IsMember({"snr_db", "n_rx", "n_tx", "gamma"}));
    app.add_option("--sweep-values", sweep_values, "Comma list of sweep values")->delimiter(',');
    app.add_option("--out", out_path, "CSV destination (stdout when omitted)");
    app.add_flag("--gamma-search", cfg.gamma_search,
                 "Per-trial exhaustive gamma search over the built-in grid");
    app.add_option("--ee-agg", ee_agg, "EE aggregation across trials")
        ->check(CLI::IsMember({"mean-ratio", "ratio-mean"}));
    app.set_config("--config", "", "key=value file mirroring the long flags; flags win");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_config;
    }

    if (const char* env_seed = std::getenv("SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env_seed, &end, 10);
        if (end == env_seed || *end != '\0') {
            std::cerr << "error: SEED environment variable is not an integer: " << env_seed
                      << "\n";
            return exit_invalid_config;
        }
        cfg.seed = v;
    }

    if (!scheme_names.empty()) {
        cfg.schemes.clear();
        for (const std::string& name : scheme_names) {
            auto s = eehc::parse_scheme(name);
            if (!s) {
                std::cerr << "error: unknown scheme '" << name << "'\n";
                return exit_invalid_config;
            }
            cfg.schemes.push_back(*s);
        }
    }
    cfg.ee_agg = ee_agg == "ratio-mean" ? eehc::EeAggregation::ratio_mean
                                        : eehc::EeAggregation::mean_ratio;

    if (sweep_var.empty() != sweep_values.empty()) {
        std::cerr << "error: --sweep and --sweep-values must be given together\n";
        return exit_invalid_config;
    }

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_config;
    }

    try {
        std::vector<eehc::SweepRow> rows;
        if (!sweep_var.empty()) {
            eehc::SweepSpec spec{*eehc::parse_sweep_variable(sweep_var), sweep_values};
            rows = eehc::sweep(cfg, spec);
        } else {
            rows = eehc::as_rows(eehc::run_trials(cfg));
        }
        if (out_path.empty())
            eehc::emit_csv(rows, std::cout);
        else
            eehc::emit_csv(rows, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime_error;
    }
    return exit_ok;
}
