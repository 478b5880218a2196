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

#include "eehc/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "eehc/baselines.hpp"

namespace eehc {

namespace {

// One trial's outcome for one scheme.
struct TrialOutcome {
    Evaluation eval;
    double bits_mean;
};

double mean_bits(const BitVector& b) {
    double acc = 0.0;
    for (int v : b.bits)
        acc += double(v);
    return acc / double(b.bits.size());
}

TrialOutcome run_admm_scheme(const ExperimentConfig& cfg, const ChannelRealization& c,
                             const ComplexMatrix& w_opt, const ComplexMatrix& f,
                             std::uint64_t solver_seed) {
    double s2 = cfg.sigma_n2();
    auto solve_at = [&](double gamma) {
        AdmmConfig acfg = cfg.admm_config();
        acfg.gamma = gamma;
        Rng rng(solver_seed); // identical start across gamma candidates
        AdmmResult res = run_admm(w_opt, cfg.l_r, acfg, cfg.pm, rng);
        TrialOutcome out;
        out.eval = evaluate_design(c.h, f, w_opt, res.combiner.w_rf, res.combiner.w_bb,
                                   res.combiner.bits, s2, cfg.n_s, cfg.n_rx, cfg.pm,
                                   /*include_phase_shifters=*/true);
        out.bits_mean = mean_bits(res.combiner.bits);
        return out;
    };

    if (!cfg.gamma_search)
        return solve_at(cfg.gamma);

    TrialOutcome best{};
    bool have = false;
    for (double g : gamma_grid) {
        TrialOutcome cand = solve_at(g);
        if (!have || cand.eval.ee > best.eval.ee) {
            best = cand;
            have = true;
        }
    }
    return best;
}

TrialOutcome run_scheme(Scheme s, const ExperimentConfig& cfg, const ChannelRealization& c,
                        const ComplexMatrix& w_opt, const ComplexMatrix& f,
                        std::uint64_t solver_seed) {
    double s2 = cfg.sigma_n2();
    switch (s) {
    case Scheme::admm:
        return run_admm_scheme(cfg, c, w_opt, f, solver_seed);
    case Scheme::hybrid1:
    case Scheme::hybrid8: {
        int b = s == Scheme::hybrid1 ? 1 : 8;
        Rng rng(solver_seed);
        BaselineResult r =
            fixed_bit_hybrid(c, b, cfg.l_r, cfg.n_s, s2, cfg.admm_config(), cfg.pm, rng);
        return {r.eval, double(b)};
    }
    case Scheme::digital: {
        BaselineResult r = full_digital_baseline(c, cfg.n_s, s2, cfg.pm);
        return {r.eval, 8.0};
    }
    case Scheme::bf: {
        Rng rng(solver_seed);
        AdmmConfig acfg = cfg.admm_config();
        acfg.n_max = cfg.bf_n_max;
        BruteForceOptions opt;
        opt.l_r_max = cfg.l_r;
        BaselineResult r = brute_force(c, opt, cfg.n_s, s2, acfg, cfg.pm, rng);
        return {r.eval, mean_bits(r.hybrid->bits)};
    }
    }
    throw std::logic_error("run_scheme: unknown scheme");
}

Aggregate aggregate(const std::vector<double>& xs) {
    Aggregate a;
    double n = double(xs.size());
    for (double x : xs)
        a.mean += x;
    a.mean /= n;
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs)
            ss += (x - a.mean) * (x - a.mean);
        a.se = std::sqrt(ss / (n - 1.0) / n);
    }
    return a;
}

void format_float(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    out += buf;
}

} // namespace

std::string scheme_name(Scheme s) {
    switch (s) {
    case Scheme::admm: return "admm";
    case Scheme::hybrid1: return "hybrid1";
    case Scheme::hybrid8: return "hybrid8";
    case Scheme::digital: return "digital";
    case Scheme::bf: return "bf";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(const std::string& name) {
    for (Scheme s : {Scheme::admm, Scheme::hybrid1, Scheme::hybrid8, Scheme::digital, Scheme::bf})
        if (scheme_name(s) == name)
            return s;
    return std::nullopt;
}

std::string sweep_variable_name(SweepVariable v) {
    switch (v) {
    case SweepVariable::snr_db: return "snr_db";
    case SweepVariable::n_rx: return "n_rx";
    case SweepVariable::n_tx: return "n_tx";
    case SweepVariable::gamma: return "gamma";
    }
    return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(const std::string& name) {
    for (SweepVariable v : {SweepVariable::snr_db, SweepVariable::n_rx, SweepVariable::n_tx,
                            SweepVariable::gamma})
        if (sweep_variable_name(v) == name)
            return v;
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (n_tx < 1 || n_rx < 1 || n_cl < 1 || n_ray < 1)
        throw std::invalid_argument("config: antenna/cluster/ray counts must be positive");
    if (!(n_s >= 1 && n_s <= l_r && l_r <= n_rx))
        throw std::invalid_argument("config: need 1 <= n_s <= l_r <= n_rx");
    if (trials < 1)
        throw std::invalid_argument("config: trials must be at least 1");
    if (schemes.empty())
        throw std::invalid_argument("config: no scheme enabled");
    if (bf_n_max < 1)
        throw std::invalid_argument("config: bf_n_max must be at least 1");
    admm_config().validate();
}

ChannelParams ExperimentConfig::channel_params() const {
    ChannelParams p;
    p.n_tx = n_tx;
    p.n_rx = n_rx;
    p.n_clusters = n_cl;
    p.n_rays = n_ray;
    return p;
}

AdmmConfig ExperimentConfig::admm_config() const {
    AdmmConfig a;
    a.alpha = alpha;
    a.gamma = gamma;
    a.n_max = n_max;
    a.bounds = bounds;
    return a;
}

std::vector<SchemeStats> run_trials(const ExperimentConfig& cfg) {
    cfg.validate();
    ChannelParams cp = cfg.channel_params();

    std::vector<std::vector<TrialOutcome>> outcomes(cfg.schemes.size());
    for (auto& v : outcomes)
        v.reserve(size_t(cfg.trials));

    for (int t = 0; t < cfg.trials; ++t) {
        Rng channel_rng(mix64(cfg.seed, std::uint64_t(t), 0));
        ChannelRealization c = sample_channel(cp, channel_rng);
        ComplexMatrix w_opt = optimal_combiner(c, cfg.n_s);
        ComplexMatrix f = optimal_precoder(c, cfg.n_s);
        std::uint64_t solver_seed = mix64(cfg.seed, std::uint64_t(t), 1);

        for (size_t i = 0; i < cfg.schemes.size(); ++i)
            outcomes[i].push_back(run_scheme(cfg.schemes[i], cfg, c, w_opt, f, solver_seed));
    }

    std::vector<SchemeStats> stats;
    stats.reserve(cfg.schemes.size());
    for (size_t i = 0; i < cfg.schemes.size(); ++i) {
        const auto& os = outcomes[i];
        std::vector<double> rate, power, ee, se, mse, bits;
        for (const TrialOutcome& o : os) {
            rate.push_back(o.eval.rate);
            power.push_back(o.eval.power);
            ee.push_back(o.eval.ee);
            se.push_back(o.eval.se);
            mse.push_back(o.eval.mse_db);
            bits.push_back(o.bits_mean);
        }
        SchemeStats st;
        st.scheme = cfg.schemes[i];
        st.trials = cfg.trials;
        st.rate = aggregate(rate);
        st.power = aggregate(power);
        st.ee = aggregate(ee);
        st.se = aggregate(se);
        st.mse_db = aggregate(mse);
        st.bits = aggregate(bits);
        if (cfg.ee_agg == EeAggregation::ratio_mean)
            st.ee.mean = st.rate.mean / st.power.mean; // se stays the per-trial spread
        stats.push_back(std::move(st));
    }
    return stats;
}

std::vector<SweepRow> sweep(const ExperimentConfig& base, const SweepSpec& spec) {
    if (spec.values.empty())
        throw std::invalid_argument("sweep: no values given");

    std::vector<SweepRow> rows;
    for (double v : spec.values) {
        ExperimentConfig cfg = base;
        switch (spec.variable) {
        case SweepVariable::snr_db: cfg.snr_db = v; break;
        case SweepVariable::n_rx: cfg.n_rx = int(std::lround(v)); break;
        case SweepVariable::n_tx: cfg.n_tx = int(std::lround(v)); break;
        case SweepVariable::gamma: cfg.gamma = v; break;
        }
        for (SchemeStats& st : run_trials(cfg))
            rows.push_back({sweep_variable_name(spec.variable), v, std::move(st)});
    }
    return rows;
}

std::vector<SweepRow> as_rows(const std::vector<SchemeStats>& stats) {
    std::vector<SweepRow> rows;
    rows.reserve(stats.size());
    for (const SchemeStats& st : stats)
        rows.push_back({"none", 0.0, st});
    return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "scheme,sweep_var,sweep_value,trials,rate_mean,rate_se,power_mean,power_se,"
          "ee_mean,ee_se,se_mean,se_se,mse_db_mean,bits_mean\n";
    for (const SweepRow& r : rows) {
        std::string line = scheme_name(r.stats.scheme);
        line += ',';
        line += r.sweep_var;
        line += ',';
        format_float(line, r.sweep_value);
        line += ',';
        line += std::to_string(r.stats.trials);
        for (double v : {r.stats.rate.mean, r.stats.rate.se, r.stats.power.mean, r.stats.power.se,
                         r.stats.ee.mean, r.stats.ee.se, r.stats.se.mean, r.stats.se.se,
                         r.stats.mse_db.mean, r.stats.bits.mean}) {
            line += ',';
            format_float(line, v);
        }
        os << line << '\n';
    }
    if (!os)
        throw std::runtime_error("emit_csv: stream write failed");
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open " + path);
    emit_csv(rows, out);
    out.flush();
    if (!out)
        throw std::runtime_error("emit_csv: write failed for " + path);
}

} // namespace eehc
