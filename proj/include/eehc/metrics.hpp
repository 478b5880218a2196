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

#ifndef eehc_metrics_H
#define eehc_metrics_H

#include "eehc/numerics.hpp"
#include "eehc/quantization.hpp"

namespace eehc {

// Receiver power model parameters, Watts.
struct PowerModel {
    double p_adc = 0.1; // per ADC bit-unit
    double p_cp = 10.0; // circuit components
    double p_r = 0.1;   // per RX antenna
    double p_ps = 0.01; // per phase shifter
};

// One design evaluated on one channel.
struct Evaluation {
    double rate;   // bits/s
    double power;  // Watts
    double ee;     // bits/Joule, rate / power
    double se;     // bits/s/Hz, rate / bandwidth
    double mse_db; // 10 log10 of the squared Frobenius distance to W_opt
};

// Reported instead of -inf when the factorization residual is exactly zero.
inline constexpr double mse_floor_db = -300.0;

// Covariance of the combined thermal-plus-quantization noise at the combiner
// output:
//   sigma_n^2 W_BB^H D^H W_RF^H W_RF D W_BB + W_BB^H C_eps W_BB.
// The result is Hermitian by construction. Throws std::domain_error when the
// result is singular (rank-deficient design).
ComplexMatrix combined_noise_cov(const ComplexMatrix& w_rf, const DistortionMatrix& delta,
                                 const ComplexMatrix& w_bb, const ComplexMatrix& c_eps,
                                 double sigma_n2);

// Information rate in bits/s of the quantized hybrid receive chain,
//   log2 | I + R_eta^-1 / N_s * (W_BB^H D W_RF^H H F)(...)^H |,
// evaluated through a Cholesky-whitened Hermitian form. Throws
// std::domain_error when the noise covariance is singular.
double rate(const ComplexMatrix& h, const ComplexMatrix& f, const ComplexMatrix& w_rf,
            const DistortionMatrix& delta, const ComplexMatrix& w_bb, const ComplexMatrix& c_eps,
            double sigma_n2, int n_s);

// Total receiver power: P_ADC * sum 2^b_i + N_R P_R (+ N_R L_R P_PS) + P_CP.
// The phase-shifter term is skipped for fully digital architectures.
double power(const BitVector& bits, int n_r, int l_r, const PowerModel& pm,
             bool include_phase_shifters);

// Same power expressed through the distortion diagonal,
// P_ADC * sum sqrt(pi sqrt(3) / (2 (1 - d_i^2))) + fixed terms.
double power_delta_domain(const DistortionMatrix& d, int n_r, int l_r, const PowerModel& pm,
                          bool include_phase_shifters);

// rate / power, bits/Joule. Throws std::invalid_argument for power <= 0.
double energy_efficiency(double rate, double power);

// 10 log10 ||W_opt - W_RF D W_BB||_F^2, floored at mse_floor_db.
double combiner_mse(const ComplexMatrix& w_opt, const ComplexMatrix& w_rf,
                    const DistortionMatrix& delta, const ComplexMatrix& w_bb);

// Full Evaluation of a hybrid design on one channel. The deployed integer
// bits drive both the rate (through the induced distortion and quantization
// noise) and the power. Bandwidth defaults to 1 Hz.
Evaluation evaluate_design(const ComplexMatrix& h, const ComplexMatrix& f,
                           const ComplexMatrix& w_opt, const ComplexMatrix& w_rf,
                           const ComplexMatrix& w_bb, const BitVector& bits, double sigma_n2,
                           int n_s, int n_r, const PowerModel& pm, bool include_phase_shifters,
                           double bandwidth = 1.0);

} // namespace eehc

#endif
