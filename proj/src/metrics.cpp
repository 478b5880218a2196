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

#include "eehc/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace eehc {

ComplexMatrix combined_noise_cov(const ComplexMatrix& w_rf, const DistortionMatrix& delta,
                                 const ComplexMatrix& w_bb, const ComplexMatrix& c_eps,
                                 double sigma_n2) {
    if (!(sigma_n2 > 0.0))
        throw std::invalid_argument("combined_noise_cov: noise variance must be positive");

    ComplexMatrix wdw = hybrid_product(w_rf, delta, w_bb);
    ComplexMatrix r = sigma_n2 * (wdw.t() * wdw) + w_bb.t() * c_eps * w_bb;
    r = (r + r.t()) * 0.5;

    ComplexMatrix chol_check;
    if (!arma::chol(chol_check, r))
        throw std::domain_error("combined_noise_cov: degenerate design, noise covariance is singular");
    return r;
}

double rate(const ComplexMatrix& h, const ComplexMatrix& f, const ComplexMatrix& w_rf,
            const DistortionMatrix& delta, const ComplexMatrix& w_bb, const ComplexMatrix& c_eps,
            double sigma_n2, int n_s) {
    ComplexMatrix r_eta = combined_noise_cov(w_rf, delta, w_bb, c_eps, sigma_n2);

    ComplexMatrix g_half = hybrid_product(w_rf, delta, w_bb).t() * (h * f); // N_s x N_s
    ComplexMatrix g = g_half * g_half.t();

    ComplexMatrix r_u;
    if (!arma::chol(r_u, r_eta))
        throw std::domain_error("rate: degenerate design, noise covariance is singular");

    // Whitened signal matrix L^-1 G L^-H with L = R^H. This keeps the
    // argument Hermitian PSD, and |I + R_eta^-1 G| = |I + L^-1 G L^-H|.
    ComplexMatrix l = r_u.t();
    ComplexMatrix y = arma::solve(arma::trimatl(l), g);
    ComplexMatrix m = arma::solve(arma::trimatl(l), ComplexMatrix(y.t()));
    m = (m + m.t()) * 0.5;

    arma::uword dim = m.n_rows;
    double r = logdet2_hpd(arma::eye<ComplexMatrix>(dim, dim) + m / double(n_s));
    return std::max(0.0, r);
}

double power(const BitVector& bits, int n_r, int l_r, const PowerModel& pm,
             bool include_phase_shifters) {
    double adc = 0.0;
    for (int b : bits.bits)
        adc += std::exp2(double(b));
    double p = pm.p_adc * adc + double(n_r) * pm.p_r + pm.p_cp;
    if (include_phase_shifters)
        p += double(n_r) * double(l_r) * pm.p_ps;
    return p;
}

double power_delta_domain(const DistortionMatrix& d, int n_r, int l_r, const PowerModel& pm,
                          bool include_phase_shifters) {
    double adc = 0.0;
    for (double di : d.diag)
        adc += std::sqrt(aqnm_constant / (1.0 - di * di));
    double p = pm.p_adc * adc + double(n_r) * pm.p_r + pm.p_cp;
    if (include_phase_shifters)
        p += double(n_r) * double(l_r) * pm.p_ps;
    return p;
}

double energy_efficiency(double rate, double power) {
    if (!(power > 0.0))
        throw std::invalid_argument("energy_efficiency: power must be positive");
    return rate / power;
}

double combiner_mse(const ComplexMatrix& w_opt, const ComplexMatrix& w_rf,
                    const DistortionMatrix& delta, const ComplexMatrix& w_bb) {
    ComplexMatrix residual = w_opt - hybrid_product(w_rf, delta, w_bb);
    double err2 = arma::accu(arma::square(arma::abs(residual)));
    if (err2 <= 0.0)
        return mse_floor_db;
    return std::max(mse_floor_db, 10.0 * std::log10(err2));
}

Evaluation evaluate_design(const ComplexMatrix& h, const ComplexMatrix& f,
                           const ComplexMatrix& w_opt, const ComplexMatrix& w_rf,
                           const ComplexMatrix& w_bb, const BitVector& bits, double sigma_n2,
                           int n_s, int n_r, const PowerModel& pm, bool include_phase_shifters,
                           double bandwidth) {
    DistortionMatrix d = make_distortion(bits);
    ComplexMatrix c_eps = quant_noise_cov(bits);

    Evaluation e;
    e.rate = rate(h, f, w_rf, d, w_bb, c_eps, sigma_n2, n_s);
    e.power = power(bits, n_r, int(w_rf.n_cols), pm, include_phase_shifters);
    e.ee = energy_efficiency(e.rate, e.power);
    e.se = e.rate / bandwidth;
    e.mse_db = combiner_mse(w_opt, w_rf, d, w_bb);
    return e;
}

} // namespace eehc
