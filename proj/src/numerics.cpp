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

#include "eehc/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace eehc {

SvdResult svd(const ComplexMatrix& a) {
    if (a.n_rows == 0 || a.n_cols == 0)
        throw std::invalid_argument("svd: matrix must be at least 1x1");
    if (!a.is_finite())
        throw std::invalid_argument("svd: input has NaN or Inf entries");

    SvdResult out;
    if (!arma::svd(out.u, out.s, out.v, a, "std"))
        throw std::runtime_error("svd: factorization did not converge");
    return out;
}

double logdet2_hpd(const ComplexMatrix& a) {
    if (a.n_rows != a.n_cols || a.n_rows == 0)
        throw std::invalid_argument("logdet2_hpd: matrix must be square and non-empty");

    double scale = std::max(1.0, arma::norm(a, "fro"));
    if (arma::norm(a - a.t(), "fro") > 1e-10 * scale)
        throw std::domain_error("logdet2_hpd: matrix is not Hermitian");

    ComplexMatrix r;
    if (!arma::chol(r, (a + a.t()) * 0.5))
        throw std::domain_error("logdet2_hpd: matrix is not positive definite");

    // |A| = prod(diag(R))^2 for A = R^H R
    double acc = 0.0;
    for (arma::uword i = 0; i < r.n_rows; ++i)
        acc += std::log2(r(i, i).real());
    return 2.0 * acc;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return arma::kron(a, b);
}

ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_rows != a.n_cols)
        throw std::invalid_argument("solve_hpd: A must be square");
    if (a.n_rows != b.n_rows)
        throw std::invalid_argument("solve_hpd: A and B row counts differ");

    ComplexMatrix r;
    if (!arma::chol(r, (a + a.t()) * 0.5))
        throw std::domain_error("solve_hpd: matrix is not positive definite");

    // A = R^H R, so X = R \ (R^H \ B)
    ComplexMatrix y = arma::solve(arma::trimatl(r.t()), b);
    return arma::solve(arma::trimatu(r), y);
}

} // namespace eehc
