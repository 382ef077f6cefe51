// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace torusq {

// Scaled complementary error function erfcx(x) = exp(x^2) erfc(x).
// Relative accuracy a few ulp up to x ~ 26 (direct product), ~1e-15 beyond
// (asymptotic series).  Arguments below about -26 overflow double.
double erfcx(double x);

// log of I(mu, k) = \int_0^1 exp(-2 mu q - k q^2) dq, evaluated in closed
// form through erfcx so that it stays finite for |mu| far beyond the range
// where I itself fits in a double.  Requires k > 0.
double log_gauss_linear_integral(double mu, double k);

// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature1D gauss_legendre_01(int n);

}  // namespace torusq
