// SPDX-License-Identifier: Apache-2.0
//
// Quadrature assembly kernels.
//
// compress_multiplier builds the k x k matrix <ehat_l' | f ehat_l> of the
// multiplication operator by f compressed onto the theta basis, through the
// weighted two-dimensional quadrature of theta_basis.hpp.  The parallel
// kernel distributes independent output rows across threads; every inner
// reduction (over quadrature nodes and over the serial q-slab loop) runs in a
// fixed order, so serial and parallel results are bit-identical and
// independent of the thread count.

#pragma once

#include <Eigen/Dense>

#include "torusq/floquet.hpp"
#include "torusq/symbol.hpp"

namespace torusq {

enum class ExecPolicy { Serial, Parallel };

Eigen::MatrixXcd compress_multiplier(const FloquetTorus& torus, const FourierSymbol& sym,
                                     int np, int nq, ExecPolicy policy);

// Gram matrix of the normalized basis (compress_multiplier with f = 1).
Eigen::MatrixXcd gram_matrix(const FloquetTorus& torus, ExecPolicy policy);

}  // namespace torusq
