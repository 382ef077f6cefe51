// SPDX-License-Identifier: Apache-2.0

#include "torusq/theta_basis.hpp"

#include <cmath>
#include <numbers>

#include "torusq/errors.hpp"
#include "torusq/special_functions.hpp"

namespace torusq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_l(const FloquetTorus& torus, int l) {
    if (l < 0 || l >= torus.k) throw PreconditionError("basis index l out of range");
}

Complex eval_e_shifted(const FloquetTorus& torus, int l, Complex z, double log_shift) {
    check_l(torus, l);
    const double p = z.real();
    const double q = z.imag();
    const double ck = torus.c * torus.k / kTwoPi;
    Complex acc(0.0);
    for (int j = -torus.J; j <= torus.J; ++j) {
        const double freq = l + static_cast<double>(j) * torus.k;
        // exponents of the prefactor and of A_j e^{i(l+jk)z} combined before
        // exponentiation; the split form overflows for large |j| Im z.
        const double re = -ck * q - j * l - 0.5 * torus.k * j * j - j * ck - freq * q - log_shift;
        const double im = ck * p - torus.k * torus.d * j + freq * p;
        acc += std::exp(Complex(re, im));
    }
    return acc;
}
}  // namespace

ThetaCoefficients theta_coefficients(const FloquetTorus& torus, int l) {
    check_l(torus, l);
    ThetaCoefficients tc;
    tc.l = l;
    tc.J = torus.J;
    tc.a.resize(2 * torus.J + 1);
    const double ck = torus.c * torus.k / kTwoPi;
    for (int j = -torus.J; j <= torus.J; ++j) {
        const double mag = -j * l - 0.5 * torus.k * j * j - j * ck;
        tc.a[j + torus.J] = std::exp(Complex(mag, -torus.k * torus.d * j));
    }
    return tc;
}

Complex eval_e(const FloquetTorus& torus, int l, Complex z) {
    return eval_e_shifted(torus, l, z, 0.0);
}

Complex eval_e_normalized(const FloquetTorus& torus, int l, Complex z) {
    return eval_e_shifted(torus, l, z, 0.5 * log_basis_norm_sq(torus, l));
}

double log_basis_norm_sq(const FloquetTorus& torus, int l) {
    check_l(torus, l);
    const double ck = torus.c * torus.k / kTwoPi;
    // log of 2 pi sum_j |A_j|^2 I(mu_j) via a log-sum-exp; the terms span many
    // orders of magnitude and individually overflow double near k ~ 100.
    std::vector<double> log_terms;
    log_terms.reserve(2 * torus.J + 1);
    double peak = -1e308;
    for (int j = -torus.J; j <= torus.J; ++j) {
        const double mu = l + static_cast<double>(j) * torus.k + ck;
        const double lt = (-2.0 * j * l - torus.k * j * j - 2.0 * j * ck) +
                          log_gauss_linear_integral(mu, torus.k);
        log_terms.push_back(lt);
        peak = std::max(peak, lt);
    }
    double sum = 0.0;
    for (double lt : log_terms) sum += std::exp(lt - peak);
    return std::log(kTwoPi) + peak + std::log(sum);
}

double basis_norm_sq(const FloquetTorus& torus, int l) {
    return std::exp(log_basis_norm_sq(torus, l));
}

Complex inner_product(const FloquetTorus& torus, const Evaluable& g1, const Evaluable& g2) {
    const Quadrature1D gl = gauss_legendre_01(torus.nq);
    const double wp = kTwoPi / torus.np;
    Complex acc(0.0);
    for (int r = 0; r < torus.nq; ++r) {
        const double q = gl.nodes[r];
        const double wq = gl.weights[r] * std::exp(-torus.k * q * q);
        Complex slab(0.0);
        for (int i = 0; i < torus.np; ++i) {
            const double p = kTwoPi * i / torus.np;
            const Complex z(p, q);
            const Complex v1 = g1(z);
            const Complex v2 = g2(z);
            if (!std::isfinite(v1.real()) || !std::isfinite(v1.imag()) ||
                !std::isfinite(v2.real()) || !std::isfinite(v2.imag())) {
                throw InputError("inner_product: non-finite evaluation");
            }
            slab += std::conj(v1) * v2;
        }
        acc += slab * (wp * wq);
    }
    return acc;
}

}  // namespace torusq
