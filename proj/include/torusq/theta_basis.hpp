// SPDX-License-Identifier: Apache-2.0
//
// Theta-series basis of the quantum torus.
//
// For level k and Floquet indices u = e^{ic}, v = e^{id}, the space of
// holomorphic functions with
//
//   g(z + 2 pi) = u^k g(z),   g(z + i) = v^k e^{-ikz + k/2} g(z)
//
// is k-dimensional and spanned by the theta series
//
//   e_l(z) = e^{i c k z/(2 pi)} sum_j A_j e^{i(l + jk) z},
//   A_j    = e^{-ikdj} exp(-jl - k j^2/2 - j c k/(2 pi)),    l = 0..k-1.
//
// Complex powers of u are fixed by the stored branch angle c in [0, 2pi):
// u^{kz/(2 pi)} := e^{ickz/(2 pi)} and u^{ik/(2 pi)} := e^{-ck/(2 pi)}.
// The coefficients decay like a Gaussian in j, so the sum is truncated at
// |j| <= J with J chosen by FloquetTorus.
//
// The companion distributional basis (epsilon_l) has no pointwise values; it
// enters only as the declared orthonormal frame behind the epsilon-basis
// operator matrices.
//
// The pairing of the ambient weighted space is
//
//   <g1, g2> = int_0^{2pi} int_0^1 conj(g1) g2 e^{-k q^2} dp dq,   z = p + iq,
//
// under which distinct e_l are exactly orthogonal (their p-frequency classes
// differ).  Squared norms are evaluated in closed form:
//
//   ||e_l||^2 = 2 pi sum_j |A_j|^2 I(mu_{l,j}),   mu_{l,j} = l + jk + ck/(2 pi),
//
// with I(mu) = int_0^1 e^{-2 mu q - k q^2} dq expressed through the scaled
// complementary error function (see special_functions.hpp).

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "torusq/floquet.hpp"

namespace torusq {

using Complex = std::complex<double>;
using Evaluable = std::function<Complex(Complex)>;

// Series coefficients A_j, j = -J..J, for one basis index l.
struct ThetaCoefficients {
    int l = 0;
    int J = 0;
    std::vector<Complex> a;  // a[j + J] = A_j

    Complex at(int j) const { return a[static_cast<size_t>(j + J)]; }
};

ThetaCoefficients theta_coefficients(const FloquetTorus& torus, int l);

// e_l(z).  Accurate on the strip |Im z| <= 2 at the default truncation.
Complex eval_e(const FloquetTorus& torus, int l, Complex z);

// e_l(z) / ||e_l||, evaluated without forming the (possibly huge) norm.
Complex eval_e_normalized(const FloquetTorus& torus, int l, Complex z);

double log_basis_norm_sq(const FloquetTorus& torus, int l);
double basis_norm_sq(const FloquetTorus& torus, int l);

// Weighted quadrature pairing <g1, g2>: trapezoid rule in p (the integrand
// of interest is 2pi-periodic), Gauss-Legendre in q.
Complex inner_product(const FloquetTorus& torus, const Evaluable& g1, const Evaluable& g2);

}  // namespace torusq
