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

#include "eehc/admm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace eehc {

namespace {

ComplexMatrix random_cgaussian(Rng& rng, int rows, int cols) {
    ComplexMatrix m;
    m.set_size(arma::uword(rows), arma::uword(cols));
    for (arma::uword j = 0; j < m.n_cols; ++j)
        for (arma::uword i = 0; i < m.n_rows; ++i)
            m(i, j) = rng.cgaussian(1.0);
    return m;
}

ComplexMatrix random_phases(Rng& rng, int rows, int cols) {
    ComplexMatrix m;
    m.set_size(arma::uword(rows), arma::uword(cols));
    for (arma::uword j = 0; j < m.n_cols; ++j)
        for (arma::uword i = 0; i < m.n_rows; ++i)
            m(i, j) = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    return m;
}

// Relative Tikhonov ridge so the step stays solvable when the normal matrix
// is rank deficient (e.g. more RF chains than streams).
ComplexMatrix ridged(const ComplexMatrix& normal) {
    double level = 1e-10 * std::real(arma::trace(normal)) / double(normal.n_rows);
    return normal + level * arma::eye<ComplexMatrix>(normal.n_rows, normal.n_cols);
}

arma::cx_vec complexify(const arma::vec& d) {
    return arma::cx_vec(d, arma::vec(d.n_elem, arma::fill::zeros));
}

arma::vec delta_gradient(const DeltaLsOperator& op, const arma::vec& d, double gamma,
                         const PowerModel& pm) {
    arma::cx_vec resid = op.a * complexify(d) - op.y;
    arma::vec g = 2.0 * arma::real(op.a.t() * resid);
    double w = gamma * pm.p_adc * std::sqrt(aqnm_constant);
    for (arma::uword i = 0; i < d.n_elem; ++i) {
        double one_minus = 1.0 - d(i) * d(i);
        g(i) += w * d(i) / (one_minus * std::sqrt(one_minus));
    }
    return g;
}

IterRecord make_record(const AdmmState& s, const ComplexMatrix& w_opt, double gamma, double alpha,
                       const PowerModel& pm, bool delta_converged) {
    IterRecord rec;
    rec.mse_db = combiner_mse(w_opt, s.w_rf, s.delta, s.w_bb);
    rec.primal_residual = arma::norm(s.z - hybrid_product(s.w_rf, s.delta, s.w_bb), "fro");
    rec.lagrangian = admm_lagrangian(s, w_opt, gamma, alpha, pm);
    rec.delta_step_converged = delta_converged;
    return rec;
}

AdmmResult run_loop(const ComplexMatrix& w_opt, AdmmState s, const AdmmConfig& cfg,
                    const PowerModel& pm, bool freeze_delta, const IterObserver& observer) {
    for (int n = 1; n <= cfg.n_max; ++n) {
        s.z = z_step(s, w_opt, cfg.alpha);
        s.w_rf = wrf_step(s, cfg.alpha);
        bool delta_converged = true;
        if (!freeze_delta) {
            rebalance_chains(s);
            DeltaStepResult ds = delta_step(s, cfg.gamma, cfg.alpha, pm, cfg.bounds,
                                            cfg.delta_step_tol, cfg.delta_step_max_iters);
            s.delta = std::move(ds.delta);
            delta_converged = ds.converged;
        }
        s.w_bb = wbb_step(s, cfg.alpha);
        s.lambda = dual_update(s, cfg.alpha);
        s.iter = n;
        s.trace.push_back(make_record(s, w_opt, cfg.gamma, cfg.alpha, pm, delta_converged));
        if (observer)
            observer(s);
    }

    HybridCombiner hc;
    hc.w_rf = std::move(s.w_rf);
    hc.bits = round_bits(s.delta, cfg.bounds);
    hc.delta = std::move(s.delta);
    hc.w_bb = std::move(s.w_bb);
    return {std::move(hc), std::move(s.trace)};
}

} // namespace

void AdmmConfig::validate() const {
    if (!(alpha > 0.0))
        throw std::invalid_argument("AdmmConfig: alpha must be positive");
    if (!(gamma >= 0.0))
        throw std::invalid_argument("AdmmConfig: gamma must be non-negative");
    if (n_max < 1)
        throw std::invalid_argument("AdmmConfig: n_max must be at least 1");
    if (!(delta_step_tol > 0.0))
        throw std::invalid_argument("AdmmConfig: delta_step_tol must be positive");
    if (delta_step_max_iters < 1)
        throw std::invalid_argument("AdmmConfig: delta_step_max_iters must be at least 1");
    if (bounds.b_min < 1 || bounds.b_max < bounds.b_min)
        throw std::invalid_argument("AdmmConfig: bit bounds must satisfy 1 <= b_min <= b_max");
}

AdmmState initialize(Rng& rng, const AdmmDims& dims, const QuantizationBounds& bounds) {
    if (dims.n_r < 1 || dims.l_r < 1 || dims.n_s < 1)
        throw std::invalid_argument("initialize: dimensions must be positive");

    double lo = delta_of_bits(bounds.b_min);
    double hi = delta_of_bits(bounds.b_max);

    AdmmState s;
    s.z = random_cgaussian(rng, dims.n_r, dims.n_s);
    s.w_rf = random_phases(rng, dims.n_r, dims.l_r);
    s.delta.diag.set_size(arma::uword(dims.l_r));
    for (arma::uword i = 0; i < s.delta.diag.n_elem; ++i)
        s.delta.diag(i) = rng.uniform(lo, hi);
    s.w_bb = random_cgaussian(rng, dims.l_r, dims.n_s);
    s.lambda = arma::zeros<ComplexMatrix>(dims.n_r, dims.n_s);
    return s;
}

ComplexMatrix z_step(const AdmmState& s, const ComplexMatrix& w_opt, double alpha) {
    return (w_opt - s.lambda + alpha * hybrid_product(s.w_rf, s.delta, s.w_bb)) / (1.0 + alpha);
}

ComplexMatrix project_unit_modulus(const ComplexMatrix& a) {
    ComplexMatrix out(a.n_rows, a.n_cols);
    for (arma::uword j = 0; j < a.n_cols; ++j) {
        for (arma::uword i = 0; i < a.n_rows; ++i) {
            double mag = std::abs(a(i, j));
            out(i, j) = mag == 0.0 ? Complex(0.0, 0.0) : a(i, j) / mag;
        }
    }
    return out;
}

ComplexMatrix wrf_step(const AdmmState& s, double alpha) {
    ComplexMatrix b = s.lambda + alpha * s.z;
    ComplexMatrix dw = distortion_matrix(s.delta) * s.w_bb; // L_R x N_s
    ComplexMatrix c = alpha * (dw * dw.t());
    // X = B (DW)^H C^-1, solved through the Hermitian system C X^H = DW B^H.
    ComplexMatrix xh = solve_hpd(ridged(c), ComplexMatrix(dw * b.t()));
    return project_unit_modulus(xh.t());
}

void rebalance_chains(AdmmState& s) {
    for (arma::uword i = 0; i < s.delta.diag.n_elem; ++i) {
        double scale = arma::norm(s.w_rf.col(i), 2) * arma::norm(s.w_bb.row(i), 2);
        if (scale > 0.0 && std::isfinite(scale)) {
            s.delta.diag(i) *= scale;
            s.w_bb.row(i) /= scale;
        }
    }
}

DeltaLsOperator delta_ls_operator(const ComplexMatrix& w_rf, const ComplexMatrix& w_bb,
                                  const ComplexMatrix& z, const ComplexMatrix& lambda,
                                  double alpha) {
    double root_alpha = std::sqrt(alpha);
    DeltaLsOperator op;
    op.a.set_size(w_rf.n_rows * w_bb.n_cols, w_rf.n_cols);
    for (arma::uword i = 0; i < w_rf.n_cols; ++i)
        op.a.col(i) = root_alpha * arma::vectorise(ComplexMatrix(w_rf.col(i) * w_bb.row(i)));
    op.y = root_alpha * arma::vectorise(ComplexMatrix(z + lambda / alpha));
    return op;
}

double delta_objective(const DeltaLsOperator& op, const arma::vec& d, double gamma,
                       const PowerModel& pm) {
    arma::cx_vec resid = op.y - op.a * complexify(d);
    double ls = arma::accu(arma::square(arma::abs(resid)));
    double penalty = 0.0;
    for (double di : d)
        penalty += std::sqrt(aqnm_constant / (1.0 - di * di));
    return ls + gamma * pm.p_adc * penalty;
}

DeltaStepResult delta_step(const AdmmState& s, double gamma, double alpha, const PowerModel& pm,
                           const QuantizationBounds& bounds, double tol, int max_iters) {
    DeltaLsOperator op = delta_ls_operator(s.w_rf, s.w_bb, s.z, s.lambda, alpha);
    double lo = delta_of_bits(bounds.b_min);
    double hi = delta_of_bits(bounds.b_max);

    arma::vec d = arma::clamp(s.delta.diag, lo, hi);
    bool converged = false;
    int iters = 0;

    // Projected gradient descent with Armijo backtracking. The objective is
    // convex and smooth on the closed box, so this reaches the global
    // box-constrained minimum.
    for (int k = 0; k < max_iters; ++k) {
        arma::vec g = delta_gradient(op, d, gamma, pm);
        arma::vec pg = d - arma::clamp(arma::vec(d - g), lo, hi);
        if (arma::norm(pg) <= tol) {
            converged = true;
            break;
        }

        double f0 = delta_objective(op, d, gamma, pm);
        double t = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            arma::vec cand = arma::clamp(arma::vec(d - t * g), lo, hi);
            double decrease = arma::dot(g, cand - d); // <= 0 by projection
            if (delta_objective(op, cand, gamma, pm) <= f0 + 1e-4 * decrease) {
                d = std::move(cand);
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        iters = k + 1;
        if (!accepted)
            break; // no further progress at machine precision
    }

    if (!converged) {
        arma::vec g = delta_gradient(op, d, gamma, pm);
        converged = arma::norm(d - arma::clamp(arma::vec(d - g), lo, hi)) <= tol;
    }
    return {DistortionMatrix{std::move(d)}, converged, iters};
}

ComplexMatrix wbb_step(const AdmmState& s, double alpha) {
    ComplexMatrix b = s.lambda + alpha * s.z;
    ComplexMatrix wd = s.w_rf * distortion_matrix(s.delta); // N_R x L_R
    ComplexMatrix d = alpha * (wd.t() * wd);
    return solve_hpd(ridged(d), ComplexMatrix(wd.t() * b));
}

ComplexMatrix dual_update(const AdmmState& s, double alpha) {
    return s.lambda + alpha * (s.z - hybrid_product(s.w_rf, s.delta, s.w_bb));
}

double admm_lagrangian(const AdmmState& s, const ComplexMatrix& w_opt, double gamma, double alpha,
                       const PowerModel& pm) {
    ComplexMatrix resid = s.z - hybrid_product(s.w_rf, s.delta, s.w_bb);
    double fit = 0.5 * std::pow(arma::norm(w_opt - s.z, "fro"), 2);
    double coupling = std::real(arma::cdot(arma::vectorise(s.lambda), arma::vectorise(resid)));
    double quad = 0.5 * alpha * std::pow(arma::norm(resid, "fro"), 2);
    double pw = gamma * power_delta_domain(s.delta, int(s.w_rf.n_rows), int(s.w_rf.n_cols), pm,
                                           /*include_phase_shifters=*/true);
    return fit + pw + coupling + quad;
}

AdmmResult run_admm(const ComplexMatrix& w_opt, int l_r, const AdmmConfig& cfg,
                    const PowerModel& pm, Rng& rng, const IterObserver& observer) {
    cfg.validate();
    if (w_opt.n_elem == 0)
        throw std::invalid_argument("run_admm: empty target combiner");
    AdmmDims dims{int(w_opt.n_rows), l_r, int(w_opt.n_cols)};
    return run_loop(w_opt, initialize(rng, dims, cfg.bounds), cfg, pm,
                    /*freeze_delta=*/false, observer);
}

AdmmResult run_admm_frozen(const ComplexMatrix& w_opt, const DistortionMatrix& frozen,
                           const AdmmConfig& cfg, const PowerModel& pm, Rng& rng,
                           const IterObserver& observer) {
    cfg.validate();
    if (w_opt.n_elem == 0)
        throw std::invalid_argument("run_admm_frozen: empty target combiner");
    if (frozen.size() < 1)
        throw std::invalid_argument("run_admm_frozen: empty distortion diagonal");
    for (double di : frozen.diag)
        if (!(di > 0.0) || !(di < 1.0))
            throw std::invalid_argument("run_admm_frozen: distortion entries must lie in (0, 1)");

    AdmmDims dims{int(w_opt.n_rows), frozen.size(), int(w_opt.n_cols)};
    AdmmState s = initialize(rng, dims, cfg.bounds);
    s.delta = frozen;
    return run_loop(w_opt, std::move(s), cfg, pm, /*freeze_delta=*/true, observer);
}

} // namespace eehc
