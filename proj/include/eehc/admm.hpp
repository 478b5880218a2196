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

#ifndef eehc_admm_H
#define eehc_admm_H

#include <functional>
#include <vector>

#include "eehc/metrics.hpp"
#include "eehc/numerics.hpp"
#include "eehc/quantization.hpp"
#include "eehc/rng.hpp"

namespace eehc {

// ADMM solver knobs. alpha is the quadratic penalty weight, gamma trades
// rate against power in the distortion step, n_max is the fixed iteration
// count (the solver never stops early).
struct AdmmConfig {
    double alpha = 1.0;
    double gamma = 0.01;
    int n_max = 40;
    double delta_step_tol = 1e-6;
    int delta_step_max_iters = 500;
    QuantizationBounds bounds{};

    void validate() const; // throws std::invalid_argument
};

struct AdmmDims {
    int n_r; // RX antennas (rows of the target combiner)
    int l_r; // RF chains
    int n_s; // data streams (columns of the target combiner)
};

// Per-iteration diagnostics. mse_db uses the continuous distortion iterate,
// not the rounded bits.
struct IterRecord {
    double mse_db;
    double primal_residual; // ||Z - W_RF D W_BB||_F
    double lagrangian;      // augmented Lagrangian after the dual update
    bool delta_step_converged;
};

// Solver iterates. z and lambda share the target combiner's shape
// (n_r x n_s); w_rf is n_r x l_r, w_bb is l_r x n_s.
struct AdmmState {
    ComplexMatrix z;
    ComplexMatrix w_rf;
    DistortionMatrix delta;
    ComplexMatrix w_bb;
    ComplexMatrix lambda;
    int iter = 0;
    std::vector<IterRecord> trace;
};

// Final factorized design: W_RF (unit-modulus), distortion diagonal with its
// rounded deployable bit vector, and W_BB.
struct HybridCombiner {
    ComplexMatrix w_rf;
    DistortionMatrix delta;
    ComplexMatrix w_bb;
    BitVector bits;
};

struct AdmmResult {
    HybridCombiner combiner;
    std::vector<IterRecord> trace;
};

struct DeltaStepResult {
    DistortionMatrix delta;
    bool converged;
    int iterations;
};

// The distortion subproblem in least-squares form: minimize over the box
//   || y - A d ||^2 + gamma * P_ADC * sum_i sqrt(c / (1 - d_i^2)),
// column i of A being sqrt(alpha) * vec(w_rf_col_i * w_bb_row_i) and
// y = sqrt(alpha) * vec(Z + Lambda / alpha).
struct DeltaLsOperator {
    ComplexMatrix a; // (n_r * n_s) x l_r
    arma::cx_vec y;  // n_r * n_s
};

// Called after every completed iteration (state.trace already extended).
using IterObserver = std::function<void(const AdmmState&)>;

// Random starting point: Z, W_BB standard complex Gaussian, W_RF uniform
// random phases, distortion uniform in its feasible interval, Lambda zero.
AdmmState initialize(Rng& rng, const AdmmDims& dims, const QuantizationBounds& bounds);

// Closed-form splitting-variable update (W_opt - Lambda + alpha W_RF D W_BB)
// / (1 + alpha), the exact minimizer of its subproblem.
ComplexMatrix z_step(const AdmmState& s, const ComplexMatrix& w_opt, double alpha);

// Elementwise a / |a| with 0 mapped to 0; idempotent.
ComplexMatrix project_unit_modulus(const ComplexMatrix& a);

// Unit-modulus projection of the least-squares minimizer of
// || Z + Lambda/alpha - M D W_BB ||_F^2 over M. A relative ridge keeps the
// normal equations solvable when D W_BB is rank deficient.
ComplexMatrix wrf_step(const AdmmState& s, double alpha);

// Gauge fix for the scale-degenerate factorization: W_RF D W_BB is invariant
// under (D, W_BB) -> (D S, S^-1 W_BB) for any positive diagonal S, so the
// distortion coordinates only mean something relative to a fixed chain scale.
// Rescales each chain so its rank-1 atom w_rf_col_i * w_bb_row_i has unit
// Frobenius norm, absorbing the scale into the distortion diagonal (which may
// leave the feasible box; the following distortion step re-projects it). The
// product, residuals and trace quantities are unchanged. Zero atoms are left
// alone.
void rebalance_chains(AdmmState& s);

// Builds the least-squares form of the distortion subproblem.
DeltaLsOperator delta_ls_operator(const ComplexMatrix& w_rf, const ComplexMatrix& w_bb,
                                  const ComplexMatrix& z, const ComplexMatrix& lambda,
                                  double alpha);

// Objective of the distortion subproblem at diagonal d.
double delta_objective(const DeltaLsOperator& op, const arma::vec& d, double gamma,
                       const PowerModel& pm);

// Solves the (convex) distortion subproblem by projected gradient descent
// with Armijo backtracking, warm-started at the incoming distortion. The
// objective never increases; converged is false when the iteration cap was
// reached before the projected-gradient norm dropped below tol.
DeltaStepResult delta_step(const AdmmState& s, double gamma, double alpha, const PowerModel& pm,
                           const QuantizationBounds& bounds, double tol = 1e-6,
                           int max_iters = 500);

// Exact least-squares baseband update (ridged like wrf_step); leaves the
// residual Z + Lambda/alpha - W_RF D W_BB orthogonal to range(W_RF D).
ComplexMatrix wbb_step(const AdmmState& s, double alpha);

// Lambda + alpha (Z - W_RF D W_BB).
ComplexMatrix dual_update(const AdmmState& s, double alpha);

// Augmented Lagrangian value at the current iterates:
//   1/2 ||W_opt - Z||^2 + gamma P(D) + Re<Lambda, Z - W_RF D W_BB>
//   + alpha/2 ||Z - W_RF D W_BB||^2.
double admm_lagrangian(const AdmmState& s, const ComplexMatrix& w_opt, double gamma, double alpha,
                       const PowerModel& pm);

// Full solver: exactly cfg.n_max iterations of the five updates, one trace
// record per iteration, bits rounded from the final distortion.
AdmmResult run_admm(const ComplexMatrix& w_opt, int l_r, const AdmmConfig& cfg,
                    const PowerModel& pm, Rng& rng, const IterObserver& observer = {});

// Same loop with the distortion pinned to `frozen` (the distortion step is
// skipped entirely). Used by the fixed-resolution and brute-force baselines.
AdmmResult run_admm_frozen(const ComplexMatrix& w_opt, const DistortionMatrix& frozen,
                           const AdmmConfig& cfg, const PowerModel& pm, Rng& rng,
                           const IterObserver& observer = {});

} // namespace eehc

#endif
