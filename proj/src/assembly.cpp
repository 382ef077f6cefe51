// SPDX-License-Identifier: Apache-2.0

#include "torusq/assembly.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "torusq/errors.hpp"
#include "torusq/special_functions.hpp"
#include "torusq/theta_basis.hpp"

namespace torusq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Symbol values along the p-grid at fixed q, via phasor recurrences:
// f(p, q) = sum_n g_n(q) e^{i n p} with g_n(q) = sum_m a_{m,n} e^{-2 pi i m q}.
void symbol_row(const FourierSymbol& sym, double q, const std::vector<Complex>& e_ip,
                std::vector<Complex>& out) {
    const int n_max = sym.n_max();
    std::vector<Complex> g(2 * n_max + 1, Complex(0.0));
    for (const auto& [mn, a] : sym.coefficients()) {
        g[mn.second + n_max] += a * std::polar(1.0, -kTwoPi * mn.first * q);
    }
    const int np = static_cast<int>(e_ip.size());
    for (int i = 0; i < np; ++i) {
        Complex acc(0.0);
        Complex ph = std::conj(std::pow(e_ip[i], n_max));  // e^{-i n_max p}
        for (int n = -n_max; n <= n_max; ++n) {
            acc += g[n + n_max] * ph;
            ph *= e_ip[i];
        }
        out[i] = acc;
    }
}

// Normalized basis values ehat_l(p + iq) over the p-grid, written into a
// contiguous column.  Coefficients carry the q-decay and the norm in the
// exponent, so no intermediate can overflow.
void basis_column(const FloquetTorus& torus, int l, double q, double half_log_norm,
                  const std::vector<Complex>& e_ip, Complex* out) {
    const int J = torus.J;
    const double ck = torus.c * torus.k / kTwoPi;
    std::vector<Complex> b(2 * J + 1);
    for (int j = -J; j <= J; ++j) {
        const double re = -j * l - 0.5 * torus.k * j * j - j * ck -
                          (l + double(j) * torus.k + ck) * q - half_log_norm;
        b[j + J] = std::exp(Complex(re, -torus.k * torus.d * j));
    }
    const int np = static_cast<int>(e_ip.size());
    const double base_freq = l + ck;
    for (int i = 0; i < np; ++i) {
        const double p = kTwoPi * i / np;
        const Complex phk = std::pow(e_ip[i], torus.k);        // e^{i k p}
        Complex ph = std::polar(1.0, -J * (torus.k * p));      // e^{-i J k p}
        Complex acc(0.0);
        for (int j = -J; j <= J; ++j) {
            acc += b[j + J] * ph;
            ph *= phk;
        }
        out[i] = acc * std::polar(1.0, base_freq * p);
    }
}

}  // namespace

Eigen::MatrixXcd compress_multiplier(const FloquetTorus& torus, const FourierSymbol& sym,
                                     int np, int nq, ExecPolicy policy) {
    if (sym.frame() != SymbolFrame::RealPlane) {
        throw FrameError("compress_multiplier: expected a RealPlane symbol");
    }
    const int k = torus.k;
    const Quadrature1D gl = gauss_legendre_01(nq);
    const double wp = kTwoPi / np;

    std::vector<double> half_log_norm(k);
    for (int l = 0; l < k; ++l) half_log_norm[l] = 0.5 * log_basis_norm_sq(torus, l);

    std::vector<Complex> e_ip(np);
    for (int i = 0; i < np; ++i) e_ip[i] = std::polar(1.0, kTwoPi * i / np);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(k, k);
    Eigen::MatrixXcd basis(np, k);     // column l = ehat_l over the p-grid
    Eigen::MatrixXcd weighted(np, k);  // conj(basis) scaled by f and the node weight
    std::vector<Complex> frow(np);

    const bool par = (policy == ExecPolicy::Parallel);

    for (int r = 0; r < nq; ++r) {  // serial: fixed accumulation order
        const double q = gl.nodes[r];
        const double wq = gl.weights[r] * std::exp(-double(torus.k) * q * q) * wp;
        symbol_row(sym, q, e_ip, frow);

#pragma omp parallel for schedule(static) if (par)
        for (int l = 0; l < k; ++l) {
            Complex* bcol = basis.col(l).data();
            basis_column(torus, l, q, half_log_norm[l], e_ip, bcol);
            Complex* wcol = weighted.col(l).data();
            for (int i = 0; i < np; ++i) wcol[i] = std::conj(bcol[i]) * (frow[i] * wq);
        }

        // acc(l', l) += sum_i weighted(i, l') basis(i, l); rows independent.
#pragma omp parallel for schedule(static) if (par)
        for (int lp = 0; lp < k; ++lp) {
            acc.row(lp).noalias() += weighted.col(lp).transpose() * basis;
        }
    }
    return acc;
}

Eigen::MatrixXcd gram_matrix(const FloquetTorus& torus, ExecPolicy policy) {
    return compress_multiplier(torus, builtin_symbol("one"), torus.np, torus.nq, policy);
}

}  // namespace torusq
