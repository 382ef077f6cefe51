// SPDX-License-Identifier: Apache-2.0
//
// Compression of multiplication operators onto the theta basis.
//
// toeplitz_matrix assembles T(f) by weighted quadrature and reports both the
// raw matrix in the orthogonal basis, M[l',l] = <e_l', f e_l>/||e_l'||^2, and
// the unit-norm-frame matrix N[l',l] = <ehat_l', f ehat_l> used for every
// norm and spectrum comparison.  Assembly always runs twice, at the context
// resolution and at doubled resolution; the largest entry movement is the
// reported quadrature noise floor and must stay below 1e-8.
//
// mode_matrix_closed_form is the independent oracle for a single Fourier
// mode f = e^{inp} e^{-2 pi i m q}.  The p-integral forces l' = (l+n) mod k;
// summing the remaining Gaussian q-integrals over the theta lattice
// telescopes into a single full-line Gaussian integral, giving
//
//   <e_l', f e_l> = 2 pi^{3/2} k^{-1/2} e^{ikdr} e^{-r l' - k r^2/2 - r ck/(2pi)}
//                   exp(((2 mu0 + n)^2 - 4 pi^2 m^2)/(4k)) e^{i pi m (2 mu0 + n)/k}
//
// with mu0 = l + ck/(2 pi) and r the wrap count (l + n - l')/k.  No
// quadrature enters this path at all.

#pragma once

#include <vector>

#include "torusq/assembly.hpp"
#include "torusq/operator_matrix.hpp"
#include "torusq/symbol.hpp"
#include "torusq/theta_basis.hpp"

namespace torusq {

struct ToeplitzResult {
    OperatorMatrix raw;          // E frame
    OperatorMatrix orthonormal;  // ENormalized frame
    double noise_floor = 0.0;    // max entry change under grid refinement
};

// Berezin-Toeplitz matrix of a RealPlane symbol.  Throws AccuracyError when
// refinement moves any entry by more than 1e-8.
ToeplitzResult toeplitz_matrix(const FloquetTorus& torus, const FourierSymbol& sym,
                               ExecPolicy policy = ExecPolicy::Parallel);

// Closed-form Toeplitz matrix of the single mode (m, n), ENormalized frame.
OperatorMatrix mode_matrix_closed_form(const FloquetTorus& torus, int m, int n);

// Coefficients gamma_l with Pi g = sum gamma_l e_l, computed as
// <e_l, g>/||e_l||^2.  g must satisfy the quasi-periodicity laws of the
// ambient space (checked at sample points to 1e-6).
std::vector<Complex> project(const FloquetTorus& torus, const Evaluable& g);

}  // namespace torusq
