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
// End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
// line with its key measured numbers; the exit code is the failure count.
//
//   1  closed-form quantization and power values
//   2  inner solvers against independent references
//   3  factorization quality of the full solver over seeded trials
//   4  energy-efficiency ordering of the schemes, with a brute-force cap
//   5  resolution selection across the trade-off weight
//   6  model invariants (projection, gradients, feasibility, normalization,
//      reporting determinism)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "eehc/admm.hpp"
#include "eehc/baselines.hpp"
#include "eehc/channel.hpp"
#include "eehc/harness.hpp"
#include "eehc/metrics.hpp"
#include "eehc/quantization.hpp"
#include "eehc/rng.hpp"

using namespace eehc;

namespace {

double mean_of(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v)
        acc += x;
    return acc / double(v.size());
}

double se_of(const std::vector<double>& v) {
    double m = mean_of(v), ss = 0.0;
    for (double x : v)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / double(v.size() - 1) / double(v.size()));
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ChannelParams make_params(int n_tx, int n_rx) {
    ChannelParams p;
    p.n_tx = n_tx;
    p.n_rx = n_rx;
    return p;
}

ComplexMatrix random_complex(Rng& rng, int rows, int cols) {
    ComplexMatrix m;
    m.set_size(arma::uword(rows), arma::uword(cols));
    for (auto& v : m)
        v = rng.cgaussian(1.0);
    return m;
}

// ---------------------------------------------------------------- criterion 1

bool criterion1(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    os << std::setprecision(7);

    double d1 = delta_of_bits(1.0);
    double d8 = delta_of_bits(8.0);
    ok &= std::abs(d1 - 0.565531) <= 1e-6;
    ok &= std::abs(d8 - 0.9999792) <= 1e-7;
    os << "delta(1)=" << d1 << ", delta(8)=" << d8;

    // Noise-covariance identity on the integer grid, in both parameterizations.
    double worst_id = 0.0;
    for (int b = 1; b <= 8; ++b) {
        double d = delta_of_bits(double(b));
        double entry = std::real(quant_noise_cov(BitVector{{b}})(0, 0));
        double k = aqnm_constant * std::exp2(-2.0 * double(b));
        worst_id = std::max(worst_id, std::abs(entry - d * d * (1.0 - d * d)));
        worst_id = std::max(worst_id, std::abs(entry - (1.0 - k) * k));
    }
    ok &= worst_id <= 1e-12;

    PowerModel pm;
    double p_one = power(BitVector{{1, 1, 1, 1}}, 16, 4, pm, true);
    double p_eight = power(BitVector{{8, 8, 8, 8}}, 16, 4, pm, true);
    ok &= std::abs(p_one - 13.04) <= 1e-12;
    ok &= std::abs(p_eight - 114.64) <= 1e-12;
    os << ", powers " << p_one << "/" << p_eight << " W";

    // Rate and power agree between the bit-domain and distortion-domain forms.
    Rng rng(1);
    ChannelRealization c = sample_channel(make_params(8, 8), rng);
    ComplexMatrix f = optimal_precoder(c, 2);
    ComplexMatrix w_rf = project_unit_modulus(random_complex(rng, 8, 4));
    ComplexMatrix w_bb = random_complex(rng, 4, 2);
    BitVector bits{{1, 3, 5, 8}};
    DistortionMatrix d = make_distortion(bits);
    ComplexMatrix c_bits = quant_noise_cov(bits);
    ComplexMatrix c_delta(4, 4, arma::fill::zeros);
    for (int i = 0; i < 4; ++i)
        c_delta(arma::uword(i), arma::uword(i)) =
            d.diag(arma::uword(i)) * d.diag(arma::uword(i)) *
            (1.0 - d.diag(arma::uword(i)) * d.diag(arma::uword(i)));
    double r_bits = rate(c.h, f, w_rf, d, w_bb, c_bits, 0.01, 2);
    double r_delta = rate(c.h, f, w_rf, d, w_bb, c_delta, 0.01, 2);
    double gap_rate = std::abs(r_bits - r_delta);
    double gap_power = std::abs(power(bits, 16, 4, pm, true) -
                                power_delta_domain(d, 16, 4, pm, true));
    ok &= gap_rate <= 1e-9;
    ok &= gap_power <= 1e-9;
    os << ", domain gaps " << std::setprecision(2) << std::scientific << gap_rate << "/"
       << gap_power;

    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    PowerModel pm;
    QuantizationBounds bounds{1, 8};
    double lo = delta_of_bits(1.0), hi = delta_of_bits(8.0);

    // Distortion step against a dense two-chain grid, 50 instances.
    const double gammas[4] = {0.0, 0.001, 0.01, 0.1};
    double worst_gap = 0.0;
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        AdmmState s = initialize(rng, AdmmDims{4, 2, 2}, bounds);
        s.lambda = 0.2 * random_complex(rng, 4, 2);
        double gamma = gammas[rep % 4];
        DeltaLsOperator op = delta_ls_operator(s.w_rf, s.w_bb, s.z, s.lambda, 1.0);
        DeltaStepResult r = delta_step(s, gamma, 1.0, pm, bounds);
        double f_out = delta_objective(op, r.delta.diag, gamma, pm);
        double best = f_out;
        for (double d0 = lo; d0 <= hi; d0 += 1e-3)
            for (double d1 = lo; d1 <= hi; d1 += 1e-3)
                best = std::min(best, delta_objective(op, arma::vec{d0, d1}, gamma, pm));
        worst_gap = std::max(worst_gap, f_out - best);
    }
    ok &= worst_gap <= 2e-3;
    os << "delta-step worst grid gap " << std::setprecision(2) << std::scientific << worst_gap
       << " (50 instances)";

    // Water-filling against an independent bisection, 100 instances.
    double worst_wf = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        int n = 2 + int(rng.raw() % 6);
        arma::vec levels;
        levels.set_size(arma::uword(n));
        for (auto& v : levels)
            v = rng.uniform(0.05, 2.5);
        double budget = rng.uniform(0.2, 4.0);
        arma::vec p = waterfill(levels, budget);

        double blo = levels.min(), bhi = levels.max() + budget;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (blo + bhi);
            double total = 0.0;
            for (double nv : levels)
                total += std::max(0.0, mid - nv);
            (total < budget ? blo : bhi) = mid;
        }
        double mu = 0.5 * (blo + bhi);
        for (arma::uword k = 0; k < levels.n_elem; ++k)
            worst_wf = std::max(worst_wf, std::abs(p(k) - std::max(0.0, mu - levels(k))));
    }
    ok &= worst_wf <= 1e-9;
    os << ", waterfill worst diff " << worst_wf << " (100 instances)";

    // Brute force against an explicit candidate list (two chains, two levels).
    {
        Rng crng(11);
        ChannelRealization c = sample_channel(make_params(8, 8), crng);
        AdmmConfig cfg;
        cfg.n_max = 8;
        cfg.bounds = QuantizationBounds{1, 2};
        BruteForceOptions opt;
        opt.l_r_max = 2;
        Rng bf_rng(31);
        BaselineResult bf = brute_force(c, opt, 2, 0.01, cfg, pm, bf_rng);

        Rng tmp(31);
        std::uint64_t base = tmp.raw();
        ComplexMatrix w_opt = optimal_combiner(c, 2);
        ComplexMatrix f = optimal_precoder(c, 2);
        double best_ee = -1.0;
        std::vector<int> best_bits;
        for (int b0 = 1; b0 <= 2; ++b0)
            for (int b1 = 1; b1 <= 2; ++b1) {
                BitVector bits{{b0, b1}};
                Rng cand(base);
                AdmmResult res = run_admm_frozen(w_opt, make_distortion(bits), cfg, pm, cand);
                Evaluation e = evaluate_design(c.h, f, w_opt, res.combiner.w_rf,
                                               res.combiner.w_bb, bits, 0.01, 2, 8, pm, true);
                if (e.ee > best_ee) {
                    best_ee = e.ee;
                    best_bits = bits.bits;
                }
            }
        bool bf_match = bf.hybrid.has_value() && std::abs(bf.eval.ee - best_ee) <= 1e-12 &&
                        bf.hybrid->bits.bits == best_bits;
        ok &= bf_match;
        os << ", brute force " << (bf_match ? "matches" : "misses") << " the 4-candidate list";
    }

    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    PowerModel pm;
    AdmmConfig cfg;
    cfg.gamma = 0.01;

    auto run_set = [&](int n_rx, std::vector<double>& finals, int& trend) {
        ChannelParams p = make_params(32, n_rx);
        for (int t = 0; t < 100; ++t) {
            Rng crng(mix64(1, std::uint64_t(t), 0));
            ChannelRealization c = sample_channel(p, crng);
            ComplexMatrix w_opt = optimal_combiner(c, 4);
            Rng srng(mix64(1, std::uint64_t(t), 1));
            AdmmResult res = run_admm(w_opt, 4, cfg, pm, srng);
            finals.push_back(res.trace.back().mse_db);
            if (res.trace.back().primal_residual <= res.trace[4].primal_residual)
                ++trend;
        }
    };

    std::vector<double> f16, f8;
    int trend16 = 0, trend8 = 0;
    run_set(16, f16, trend16);
    run_set(8, f8, trend8);

    double med16 = median_of(f16), med8 = median_of(f8);
    ok &= med16 <= -10.0;
    ok &= trend16 >= 90;
    ok &= med8 <= -15.0;
    ok &= med8 < med16;

    os << std::fixed << std::setprecision(2) << "median mse " << med16 << " dB (16 rx) / " << med8
       << " dB (8 rx), residual trend " << trend16 << "/100";
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    PowerModel pm;
    const double sigma_n2 = 0.01;
    ChannelParams p = make_params(32, 16);
    AdmmConfig cfg;
    cfg.gamma = 0.01;

    std::vector<double> ee_admm, ee_h1, ee_h8, ee_dig;
    for (int t = 0; t < 200; ++t) {
        Rng crng(mix64(1, std::uint64_t(t), 0));
        ChannelRealization c = sample_channel(p, crng);
        ComplexMatrix w_opt = optimal_combiner(c, 4);
        ComplexMatrix f = optimal_precoder(c, 4);
        std::uint64_t seed = mix64(1, std::uint64_t(t), 1);

        Rng ra(seed);
        AdmmResult res = run_admm(w_opt, 4, cfg, pm, ra);
        ee_admm.push_back(evaluate_design(c.h, f, w_opt, res.combiner.w_rf, res.combiner.w_bb,
                                          res.combiner.bits, sigma_n2, 4, 16, pm, true)
                              .ee);
        Rng r1(seed);
        ee_h1.push_back(fixed_bit_hybrid(c, 1, 4, 4, sigma_n2, cfg, pm, r1).eval.ee);
        Rng r8(seed);
        ee_h8.push_back(fixed_bit_hybrid(c, 8, 4, 4, sigma_n2, cfg, pm, r8).eval.ee);
        ee_dig.push_back(full_digital_baseline(c, 4, sigma_n2, pm).eval.ee);
    }

    auto margin = [](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> d(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            d[i] = a[i] - b[i];
        double se = se_of(d);
        return se > 0.0 ? mean_of(d) / se : (mean_of(d) > 0.0 ? 1e9 : -1e9);
    };
    double m1 = margin(ee_admm, ee_h1);
    double m2 = margin(ee_h1, ee_h8);
    double m3 = margin(ee_h8, ee_dig);
    ok &= m1 >= 2.0 && m2 >= 2.0 && m3 >= 2.0;

    os << std::fixed << std::setprecision(3) << "EE " << mean_of(ee_admm) << " > "
       << mean_of(ee_h1) << " > " << mean_of(ee_h8) << " > " << mean_of(ee_dig) << " (margins "
       << std::setprecision(1) << m1 << "/" << m2 << "/" << m3 << " se)";

    // Near-optimality cap against the exhaustive search on 50 trials.
    AdmmConfig bf_cfg = cfg;
    bf_cfg.n_max = 20;
    BruteForceOptions opt;
    opt.l_r_max = 4;
    std::vector<double> ee_bf;
    for (int t = 0; t < 50; ++t) {
        Rng crng(mix64(1, std::uint64_t(t), 0));
        ChannelRealization c = sample_channel(p, crng);
        Rng rb(mix64(1, std::uint64_t(t), 1));
        ee_bf.push_back(brute_force(c, opt, 4, sigma_n2, bf_cfg, pm, rb).eval.ee);
    }
    std::vector<double> admm50(ee_admm.begin(), ee_admm.begin() + 50);
    double cap = 1.05 * mean_of(ee_bf);
    ok &= mean_of(admm50) <= cap;
    os << std::setprecision(3) << ", admm " << mean_of(admm50) << " <= 1.05 x bf "
       << mean_of(ee_bf);

    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5(std::string& detail) {
    bool ok = true;
    std::ostringstream os;

    ExperimentConfig cfg;
    cfg.trials = 200;
    cfg.seed = 1;
    cfg.schemes = {Scheme::admm};

    double bits[3] = {0, 0, 0}, pw[3] = {0, 0, 0};
    const double gammas[3] = {0.001, 0.01, 0.1};
    for (int k = 0; k < 3; ++k) {
        cfg.gamma = gammas[k];
        auto stats = run_trials(cfg);
        bits[k] = stats[0].bits.mean;
        pw[k] = stats[0].power.mean;
    }
    ok &= bits[0] >= 3.0 && bits[0] <= 5.0;
    ok &= bits[1] >= 2.0 && bits[1] <= 4.0;
    ok &= bits[2] >= 1.0 && bits[2] <= 3.0;
    ok &= bits[0] >= bits[1] && bits[1] >= bits[2];

    ExperimentConfig fixed = cfg;
    fixed.trials = 1;
    fixed.schemes = {Scheme::hybrid8, Scheme::digital};
    auto fs = run_trials(fixed);
    double p_h8 = fs[0].power.mean, p_dig = fs[1].power.mean;
    ok &= pw[2] < pw[0] && pw[0] < p_h8 && p_h8 < p_dig;

    os << std::fixed << std::setprecision(2) << "mean bits " << bits[0] << "/" << bits[1] << "/"
       << bits[2] << " at gamma 0.001/0.01/0.1, powers " << pw[2] << " < " << pw[0] << " < "
       << p_h8 << " < " << p_dig << " W";
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6(std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    std::vector<std::string> failed;

    // Unit-modulus projection: idempotent, zero-preserving.
    {
        bool sub = true;
        Rng rng(2024);
        for (int rep = 0; rep < 20; ++rep) {
            ComplexMatrix x = random_complex(rng, 5, 3);
            x(arma::uword(rep % 5), 0) = Complex(0.0, 0.0);
            ComplexMatrix pr = project_unit_modulus(x);
            sub &= std::abs(pr(arma::uword(rep % 5), 0)) == 0.0;
            for (const auto& v : pr)
                sub &= std::abs(v) == 0.0 || std::abs(std::abs(v) - 1.0) < 1e-15;
            sub &= arma::norm(project_unit_modulus(pr) - pr, "fro") < 1e-14;
        }
        if (!sub)
            failed.push_back("projection");
        ok &= sub;
    }

    // Analytic gradients of the smooth subproblems vs central differences.
    {
        bool sub = true;
        Rng rng(77);
        const double h = 1e-5;
        QuantizationBounds bounds{1, 8};
        auto inner = [](const ComplexMatrix& a, const ComplexMatrix& b) {
            return std::real(arma::accu(arma::conj(a) % b));
        };
        for (int rep = 0; rep < 3; ++rep) {
            AdmmState s = initialize(rng, AdmmDims{6, 3, 2}, bounds);
            s.lambda = random_complex(rng, 6, 2);
            ComplexMatrix w_opt = random_complex(rng, 6, 2);
            double alpha = 0.5 + rng.uniform();
            ComplexMatrix prod = hybrid_product(s.w_rf, s.delta, s.w_bb);
            ComplexMatrix t = s.z + s.lambda / alpha;

            ComplexMatrix z = random_complex(rng, 6, 2);
            ComplexMatrix g_z = (z - w_opt) + s.lambda + alpha * (z - prod);
            auto f_z = [&](const ComplexMatrix& m) {
                return 0.5 * std::pow(arma::norm(w_opt - m, "fro"), 2) +
                       inner(s.lambda, m - prod) +
                       0.5 * alpha * std::pow(arma::norm(m - prod, "fro"), 2);
            };
            ComplexMatrix a_bb = s.w_rf * distortion_matrix(s.delta);
            ComplexMatrix w = random_complex(rng, 3, 2);
            ComplexMatrix g_bb = -2.0 * a_bb.t() * (t - a_bb * w);
            auto f_bb = [&](const ComplexMatrix& m) {
                return std::pow(arma::norm(t - a_bb * m, "fro"), 2);
            };
            ComplexMatrix g_rf_op = distortion_matrix(s.delta) * s.w_bb;
            ComplexMatrix m0 = random_complex(rng, 6, 3);
            ComplexMatrix g_rf = -2.0 * (t - m0 * g_rf_op) * g_rf_op.t();
            auto f_rf = [&](const ComplexMatrix& m) {
                return std::pow(arma::norm(t - m * g_rf_op, "fro"), 2);
            };

            for (int k = 0; k < 3; ++k) {
                ComplexMatrix e1 = random_complex(rng, 6, 2);
                e1 /= arma::norm(e1, "fro");
                double fd = (f_z(z + h * e1) - f_z(z - h * e1)) / (2.0 * h);
                sub &= std::abs(fd - inner(g_z, e1)) < 1e-6 * (1.0 + std::abs(fd));

                ComplexMatrix e2 = random_complex(rng, 3, 2);
                e2 /= arma::norm(e2, "fro");
                fd = (f_bb(w + h * e2) - f_bb(w - h * e2)) / (2.0 * h);
                sub &= std::abs(fd - inner(g_bb, e2)) < 1e-6 * (1.0 + std::abs(fd));

                ComplexMatrix e3 = random_complex(rng, 6, 3);
                e3 /= arma::norm(e3, "fro");
                fd = (f_rf(m0 + h * e3) - f_rf(m0 - h * e3)) / (2.0 * h);
                sub &= std::abs(fd - inner(g_rf, e3)) < 1e-6 * (1.0 + std::abs(fd));
            }
        }
        if (!sub)
            failed.push_back("gradients");
        ok &= sub;
    }

    // Feasibility of every iterate of a full run.
    {
        bool sub = true;
        Rng crng(314);
        ChannelRealization c = sample_channel(make_params(8, 8), crng);
        ComplexMatrix w_opt = optimal_combiner(c, 2);
        AdmmConfig cfg;
        cfg.n_max = 15;
        PowerModel pm;
        double lo = delta_of_bits(1.0), hi = delta_of_bits(8.0);
        Rng rng(271828);
        run_admm(w_opt, 3, cfg, pm, rng, [&](const AdmmState& st) {
            for (const auto& v : st.w_rf)
                sub &= std::abs(std::abs(v) - 1.0) < 1e-12;
            for (double d : st.delta.diag)
                sub &= d >= lo - 1e-12 && d <= hi + 1e-12;
        });
        if (!sub)
            failed.push_back("feasibility");
        ok &= sub;
    }

    // Channel energy normalization: E||H||_F^2 = N_T N_R within 3%.
    double dev = 0.0;
    {
        ChannelParams p = make_params(32, 16);
        Rng rng(999);
        double acc = 0.0;
        const int draws = 3000;
        for (int k = 0; k < draws; ++k)
            acc += std::pow(arma::norm(sample_channel(p, rng).h, "fro"), 2);
        dev = std::abs(acc / double(draws) - 512.0) / 512.0;
        if (dev >= 0.03)
            failed.push_back("normalization");
        ok &= dev < 0.03;
    }

    // Deterministic CSV reporting.
    {
        ExperimentConfig cfg;
        cfg.n_rx = 8;
        cfg.n_tx = 8;
        cfg.trials = 2;
        cfg.schemes = {Scheme::digital};
        std::ostringstream a, b;
        emit_csv(as_rows(run_trials(cfg)), a);
        emit_csv(as_rows(run_trials(cfg)), b);
        bool sub = !a.str().empty() && a.str() == b.str();
        if (!sub)
            failed.push_back("determinism");
        ok &= sub;
    }

    if (ok) {
        os << "projection/gradients/feasibility/normalization/determinism hold, channel energy"
           << " within " << std::setprecision(2) << std::fixed << 100.0 * dev << "%";
    } else {
        os << "violated:";
        for (const auto& f : failed)
            os << " " << f;
    }
    detail = os.str();
    return ok;
}

} // namespace

int main() {
    using Criterion = bool (*)(std::string&);
    const Criterion criteria[6] = {criterion1, criterion2, criterion3,
                                   criterion4, criterion5, criterion6};

    int failures = 0;
    for (int i = 0; i < 6; ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = criteria[i](detail);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("criterion %d: %s - %s [%.1fs]\n", i + 1, ok ? "PASS" : "FAIL",
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    std::printf("acceptance: %d/6 criteria passed\n", 6 - failures);
    return failures;
}
