// SPDX-License-Identifier: Apache-2.0
//
// Diagonal action of the Bargmann transform on the torus bases.
//
// The Gaussian-kernel transform with weight phi(z, x) = (i/2)(z - x)^2 maps
// the distributional basis diagonally onto the theta basis,
//
//   epsilon_l  ->  c_k^l e_l,        c_k^l = c0 sqrt(2 pi) k^{1/4} e^{-mu_l^2/(2k)},
//   e_l        ->  ct_k^l epsilon_l, ct_k^l = c0 k^{-1/4} sqrt(2) pi e^{+mu_l^2/(2k)},
//
// with mu_l = l + ck/(2 pi) and the universal constant c0 = 2^{-1/2} pi^{-3/4}.
// The products satisfy c_k^l ct_k^l = 1 exactly, which makes the transform a
// bijection between the bases; conjugating an epsilon-basis matrix by
// diag(c_k^l) yields its e-basis matrix.

#pragma once

#include <vector>

#include "torusq/operator_matrix.hpp"
#include "torusq/theta_basis.hpp"

namespace torusq {

struct BargmannDiagonal {
    // The exponents e^{+-mu^2/(2k)} overflow double near k l^2 ~ 1e3^3, so the
    // constants are stored as logarithms; conversions combine logs before
    // exponentiating.
    std::vector<double> log_c;        // log c_k^l
    std::vector<double> log_c_tilde;  // log ct_k^l

    double c(int l) const;
    double c_tilde(int l) const;
    int size() const { return static_cast<int>(log_c.size()); }

    static constexpr double c_phi1 = 0.29965573757661187296;  // 2^{-1/2} pi^{-3/4}
};

BargmannDiagonal bargmann_constants(const FloquetTorus& torus);

// C M C^{-1} with C = diag(c_k^l): epsilon-basis matrix -> e-basis matrix.
OperatorMatrix conjugate_to_e_basis(const OperatorMatrix& m, const BargmannDiagonal& diag);
// The inverse conversion, C^{-1} M C.
OperatorMatrix conjugate_to_epsilon_basis(const OperatorMatrix& m, const BargmannDiagonal& diag);

// Closed-form transform of the pure exponential x -> e^{i nu x}:
//   c0 k^{3/4} sqrt(2 pi / k) e^{i nu z} e^{-nu^2/(2k)}.
Complex transform_exponential(const FloquetTorus& torus, double nu, Complex z);

}  // namespace torusq
