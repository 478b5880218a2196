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

#ifndef eehc_numerics_H
#define eehc_numerics_H

#include <armadillo>
#include <complex>

namespace eehc {

using Complex = std::complex<double>;
using ComplexMatrix = arma::cx_mat;

struct SvdResult {
    ComplexMatrix u; // left singular vectors, full square basis
    arma::vec s;     // singular values, non-negative, decreasing
    ComplexMatrix v; // right singular vectors, full square basis
};

// Full SVD A = U * diag(s) * V^H. Throws std::invalid_argument on empty or
// non-finite input, std::runtime_error if the factorization fails.
SvdResult svd(const ComplexMatrix& a);

// log2 |A| for Hermitian positive definite A, computed from a Cholesky
// factorization. Hermitian symmetry is required within a 1e-10 relative
// tolerance; non-positive-definite input throws std::domain_error.
double logdet2_hpd(const ComplexMatrix& a);

// Standard Kronecker product, (rA*rB) x (cA*cB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Solves A X = B for Hermitian positive definite A via Cholesky.
// Throws std::domain_error if A is indefinite or singular.
ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace eehc

#endif
