// SPDX-License-Identifier: Apache-2.0

#include "torusq/toeplitz.hpp"

#include <cmath>
#include <numbers>

#include "torusq/errors.hpp"

namespace torusq {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRefinementTolerance = 1e-8;

inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
}  // namespace

ToeplitzResult toeplitz_matrix(const FloquetTorus& torus, const FourierSymbol& sym,
                               ExecPolicy policy) {
    if (sym.frame() != SymbolFrame::RealPlane) {
        throw FrameError("toeplitz_matrix: expected a RealPlane symbol");
    }
    const Eigen::MatrixXcd coarse = compress_multiplier(torus, sym, torus.np, torus.nq, policy);
    const Eigen::MatrixXcd fine =
        compress_multiplier(torus, sym, 2 * torus.np, 2 * torus.nq, policy);
    const double floor = (fine - coarse).cwiseAbs().maxCoeff();
    if (floor > kRefinementTolerance) {
        throw AccuracyError("toeplitz_matrix: quadrature did not converge (floor " +
                                std::to_string(floor) + " at np=" + std::to_string(torus.np) +
                                ", nq=" + std::to_string(torus.nq) + ")",
                            floor, kRefinementTolerance);
    }
    ToeplitzResult result;
    result.noise_floor = floor;
    result.orthonormal = OperatorMatrix{BasisFrame::ENormalized, torus.k, fine};
    result.raw = from_normalized_frame(result.orthonormal, torus);
    return result;
}

OperatorMatrix mode_matrix_closed_form(const FloquetTorus& torus, int m, int n) {
    const int k = torus.k;
    const double ck = torus.c * k / kTwoPi;
    OperatorMatrix out = OperatorMatrix::zero(BasisFrame::ENormalized, k);
    const double log_pref = std::log(2.0) + 1.5 * std::log(kPi) - 0.5 * std::log(double(k));
    std::vector<double> log_norm(k);
    for (int l = 0; l < k; ++l) log_norm[l] = log_basis_norm_sq(torus, l);
    for (int l = 0; l < k; ++l) {
        const int r = floor_div(l + n, k);
        const int lp = l + n - r * k;
        const double mu0 = l + ck;
        const double log_mag = log_pref - r * lp - 0.5 * k * double(r) * r - r * ck +
                               ((2.0 * mu0 + n) * (2.0 * mu0 + n) - 4.0 * kPi * kPi * m * m) / (4.0 * k) -
                               0.5 * (log_norm[l] + log_norm[lp]);
        const double phase = torus.d * k * r + kPi * m * (2.0 * mu0 + n) / k;
        out.entries(lp, l) = std::polar(std::exp(log_mag), phase);
    }
    return out;
}

std::vector<Complex> project(const FloquetTorus& torus, const Evaluable& g) {
    // Quasi-periodicity screen at fixed sample points.
    const Complex sample_z[] = {{0.37, 0.21}, {2.93, 0.55}, {5.11, 0.08}, {1.57, 0.83}};
    const Complex uk = std::polar(1.0, torus.c * torus.k);
    const Complex vk = std::polar(1.0, torus.d * torus.k);
    for (const Complex& z : sample_z) {
        const Complex g0 = g(z);
        const Complex gp = g(z + kTwoPi);
        const double scale_p = std::max({std::abs(g0), std::abs(gp), 1e-300});
        if (std::abs(gp - uk * g0) > 1e-6 * scale_p) {
            throw DomainError("project: input violates the p quasi-periodicity law");
        }
        const Complex gq = g(z + Complex(0.0, 1.0));
        const Complex expected =
            vk * std::exp(Complex(0.0, -double(torus.k)) * z + 0.5 * torus.k) * g0;
        const double scale_q = std::max({std::abs(gq), std::abs(expected), 1e-300});
        if (std::abs(gq - expected) > 1e-6 * scale_q) {
            throw DomainError("project: input violates the q quasi-periodicity law");
        }
    }
    std::vector<Complex> gamma(torus.k);
    for (int l = 0; l < torus.k; ++l) {
        const Complex num = inner_product(
            torus, [&](Complex z) { return eval_e_normalized(torus, l, z); }, g);
        gamma[l] = num * std::exp(-0.5 * log_basis_norm_sq(torus, l));
    }
    return gamma;
}

}  // namespace torusq
