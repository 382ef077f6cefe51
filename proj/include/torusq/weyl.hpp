// SPDX-License-Identifier: Apache-2.0
//
// Weyl quantization matrices on the quantum torus.
//
// The translation operator T(p0, q0) phi(x) = e^{-i q0 p0 k/2} e^{i x q0 k}
// phi(x - p0), evaluated at lattice vectors (2 pi m/k, n/k), acts on the
// distributional basis by one phase per column:
//
//   T(2 pi m/k, n/k) eps_l = e^{-i pi m n/k} u^{-m} e^{-2 pi i l m/k} v^{k r} eps_{l'},
//   l' = (l + n) mod k,  r = (l + n - l')/k.
//
// This closed form is validated against the pointwise e-basis action (the
// displayed sum below), which uses no matrix algebra at all:
//
//   Op(b) u(z) = sum b_{m,n} e^{-i pi m n/k} e^{-n^2/(2k)} e^{i n z}
//                u(z - 2 pi m/k + i n/k).

#pragma once

#include "torusq/operator_matrix.hpp"
#include "torusq/symbol.hpp"
#include "torusq/theta_basis.hpp"

namespace torusq {

// Matrix of T(2 pi m/k, n/k) on the epsilon basis (unitary, one nonzero
// entry of modulus one per column).
OperatorMatrix translation_matrix(const FloquetTorus& torus, int m, int n);

// sum a_{m,n} T(2 pi m/k, n/k) over the table, in fixed lexicographic
// (m, n) order.  Requires a RealPlane table; Hermitian for real symbols.
OperatorMatrix quantize_weyl(const FloquetTorus& torus, const FourierSymbol& sym);

// Complex Weyl quantization on the theta basis: the epsilon-basis matrix of
// the same coefficient table conjugated by the Bargmann diagonal.  Requires a
// LambdaPhi1 table.
OperatorMatrix quantize_weyl_complex(const FloquetTorus& torus, const FourierSymbol& sym);

// The displayed sum applied directly to an evaluable function; independent
// of every matrix above.  f must be evaluable on the translated arguments.
Complex apply_complex_weyl_pointwise(const FloquetTorus& torus, const FourierSymbol& sym,
                                     const Evaluable& f, Complex z);

}  // namespace torusq
