// SPDX-License-Identifier: Apache-2.0

#include "torusq/bargmann.hpp"

#include <cmath>
#include <numbers>

#include "torusq/errors.hpp"

namespace torusq {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double BargmannDiagonal::c(int l) const { return std::exp(log_c.at(l)); }
double BargmannDiagonal::c_tilde(int l) const { return std::exp(log_c_tilde.at(l)); }

BargmannDiagonal bargmann_constants(const FloquetTorus& torus) {
    BargmannDiagonal d;
    d.log_c.resize(torus.k);
    d.log_c_tilde.resize(torus.k);
    const double log_c_phi1 = std::log(BargmannDiagonal::c_phi1);
    for (int l = 0; l < torus.k; ++l) {
        const double mu = l + torus.c * torus.k / kTwoPi;
        const double gauss = mu * mu / (2.0 * torus.k);
        d.log_c[l] = log_c_phi1 + 0.5 * std::log(kTwoPi) + 0.25 * std::log(double(torus.k)) - gauss;
        d.log_c_tilde[l] =
            log_c_phi1 - 0.25 * std::log(double(torus.k)) + 0.5 * std::log(2.0) + std::log(kPi) + gauss;
    }
    return d;
}

namespace {
OperatorMatrix conjugate_by_diagonal(const OperatorMatrix& m, const BargmannDiagonal& diag,
                                     double sign, BasisFrame out) {
    if (m.k != diag.size()) throw PreconditionError("Bargmann conversion: level mismatch");
    OperatorMatrix r{out, m.k, Eigen::MatrixXcd(m.k, m.k)};
    for (int col = 0; col < m.k; ++col) {
        for (int row = 0; row < m.k; ++row) {
            r.entries(row, col) =
                m.entries(row, col) * std::exp(sign * (diag.log_c[row] - diag.log_c[col]));
        }
    }
    return r;
}
}  // namespace

OperatorMatrix conjugate_to_e_basis(const OperatorMatrix& m, const BargmannDiagonal& diag) {
    if (m.basis != BasisFrame::Epsilon) {
        throw FrameError("conjugate_to_e_basis: expected an epsilon-basis matrix");
    }
    return conjugate_by_diagonal(m, diag, +1.0, BasisFrame::E);
}

OperatorMatrix conjugate_to_epsilon_basis(const OperatorMatrix& m, const BargmannDiagonal& diag) {
    if (m.basis != BasisFrame::E) {
        throw FrameError("conjugate_to_epsilon_basis: expected an e-basis matrix");
    }
    return conjugate_by_diagonal(m, diag, -1.0, BasisFrame::Epsilon);
}

Complex transform_exponential(const FloquetTorus& torus, double nu, Complex z) {
    const double k = torus.k;
    const double pref = BargmannDiagonal::c_phi1 * std::pow(k, 0.75) * std::sqrt(kTwoPi / k);
    return pref * std::exp(Complex(0.0, 1.0) * nu * z - nu * nu / (2.0 * k));
}

}  // namespace torusq
