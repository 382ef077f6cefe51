// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one check per shipping criterion, each printing a
// PASS/FAIL line.  Runs at desk scale (k <= 128) in a few minutes.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "torusq/bargmann.hpp"
#include "torusq/cli.hpp"
#include "torusq/correspondence.hpp"
#include "torusq/errors.hpp"
#include "torusq/toeplitz.hpp"

using namespace torusq;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::mt19937 gen(20240901u);
double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
Complex random_z(double im_lo, double im_hi) { return {uniform(0.0, kTwoPi), uniform(im_lo, im_hi)}; }

FourierSymbol shifted_cos_p(double offset) {
    FourierSymbol::Table t;
    t[{0, 0}] = offset;
    t[{0, 1}] = 0.5;
    t[{0, -1}] = 0.5;
    return FourierSymbol::from_coefficients(std::move(t), SymbolFrame::RealPlane);
}

FloquetTorus torus_for(int k, const FourierSymbol& sym, double c, double d) {
    return FloquetTorus::make(k, c, d, -1, -1, -1, sym.m_max(), sym.n_max());
}

// 1. Bargmann inversion: max over l, k of |c_k^l c~_k^l - 1| < 1e-12.
void criterion_1() {
    double worst = 0.0;
    for (int k : {1, 2, 4, 8, 16, 32, 64, 128}) {
        for (double c : {0.0, 0.9}) {
            const FloquetTorus t = FloquetTorus::make(k, c, 2.3);
            const BargmannDiagonal d = bargmann_constants(t);
            for (int l = 0; l < k; ++l) {
                worst = std::max(worst, std::abs(d.c(l) * d.c_tilde(l) - 1.0));
            }
        }
    }
    std::ostringstream ss;
    ss << "max |c*c~ - 1| = " << worst;
    report(1, "Bargmann inversion", worst < 1e-12, ss.str());
}

// 2. Basis orthogonality and closed-form norms vs quadrature.
void criterion_2() {
    double worst_off = 0.0, worst_diag = 0.0;
    for (int k : {2, 4, 8, 16, 32, 64}) {
        const FloquetTorus t = FloquetTorus::make(k, 0.55, 1.8, -1, -1, -1, 0, 0);
        const Eigen::MatrixXcd g = gram_matrix(t, ExecPolicy::Parallel);
        for (int row = 0; row < k; ++row) {
            for (int col = 0; col < k; ++col) {
                if (row == col) {
                    // diagonal of the normalized Gram == quadrature norm over
                    // the closed-form norm
                    worst_diag = std::max(worst_diag, std::abs(g(row, col).real() - 1.0));
                } else {
                    worst_off = std::max(worst_off, std::abs(g(row, col)));
                }
            }
        }
    }
    std::ostringstream ss;
    ss << "max off-diagonal " << worst_off << ", max |quad/closed - 1| " << worst_diag;
    report(2, "basis orthogonality and norms", worst_off < 1e-10 && worst_diag < 1e-9, ss.str());
}

// 3. Quasi-periodicity of the basis functions at 100 random points per (k, l).
void criterion_3() {
    double worst = 0.0;
    for (int k : {1, 2, 4, 8, 16, 32}) {
        const FloquetTorus t = FloquetTorus::make(k, 1.15, 0.35);
        const Complex uk = std::polar(1.0, t.c * k);
        const Complex vk = std::polar(1.0, t.d * k);
        for (int l = 0; l < k; ++l) {
            for (int trial = 0; trial < 100; ++trial) {
                const Complex z = random_z(0.0, 1.0);
                const Complex base = eval_e(t, l, z);
                const Complex rhs_p = uk * base;
                worst = std::max(worst, std::abs(eval_e(t, l, z + kTwoPi) - rhs_p) / std::abs(rhs_p));
                const Complex rhs_q =
                    vk * std::exp(Complex(0.0, -double(k)) * z + 0.5 * k) * base;
                worst = std::max(worst,
                                 std::abs(eval_e(t, l, z + Complex(0, 1)) - rhs_q) / std::abs(rhs_q));
            }
        }
    }
    std::ostringstream ss;
    ss << "max relative defect " << worst;
    report(3, "quasi-periodicity laws", worst < 1e-10, ss.str());
}

// 4. Translation matrices: pointwise oracle, unitarity, composition scalar.
void criterion_4() {
    double worst_oracle = 0.0, worst_unitary = 0.0, worst_comp = 0.0;
    for (int k : {2, 3, 4, 8}) {
        const FloquetTorus t = FloquetTorus::make(k, 0.6, 1.4);
        const BargmannDiagonal diag = bargmann_constants(t);
        for (int m = -2; m <= 2; ++m) {
            for (int n = -2; n <= 2; ++n) {
                const OperatorMatrix eps = translation_matrix(t, m, n);
                worst_unitary = std::max(
                    worst_unitary, (eps.entries.adjoint() * eps.entries -
                                    Eigen::MatrixXcd::Identity(k, k))
                                       .cwiseAbs()
                                       .maxCoeff());
                const Eigen::MatrixXcd comp =
                    translation_matrix(t, m, 0).entries * translation_matrix(t, 0, n).entries -
                    std::polar(1.0, -kPi * m * n / k) * eps.entries;
                worst_comp = std::max(worst_comp, comp.cwiseAbs().maxCoeff());

                const OperatorMatrix w_e = conjugate_to_e_basis(eps, diag);
                FourierSymbol::Table tab;
                tab[{m, n}] = 1.0;
                const FourierSymbol mode =
                    FourierSymbol::from_coefficients(std::move(tab), SymbolFrame::LambdaPhi1);
                const int l = ((m + n) % k + k) % k;
                for (int trial = 0; trial < 50; ++trial) {
                    const Complex z = random_z(0.0, 0.8);
                    Complex via_matrix(0.0);
                    for (int lp = 0; lp < k; ++lp) {
                        via_matrix += w_e.entries(lp, l) * eval_e(t, lp, z);
                    }
                    const Complex via_sum = apply_complex_weyl_pointwise(
                        t, mode, [&](Complex w) { return eval_e(t, l, w); }, z);
                    worst_oracle =
                        std::max(worst_oracle, std::abs(via_matrix - via_sum) / std::abs(via_sum));
                }
            }
        }
    }
    std::ostringstream ss;
    ss << "oracle " << worst_oracle << ", unitarity " << worst_unitary << ", composition "
       << worst_comp;
    report(4, "translation-operator oracle",
           worst_oracle < 1e-9 && worst_unitary < 1e-12 && worst_comp < 1e-13, ss.str());
}

// 5. Egorov exactness: W C = C M entrywise.
void criterion_5() {
    double worst = 0.0;
    for (int k : {4, 8, 16, 32}) {
        const FloquetTorus t = FloquetTorus::make(k, 0.45, 1.05);
        const BargmannDiagonal d = bargmann_constants(t);
        for (const char* name : {"harper", "cos_p"}) {
            const FourierSymbol sym = builtin_symbol(name);
            const OperatorMatrix m_eps = quantize_weyl(t, sym);
            const OperatorMatrix w = quantize_weyl_complex(t, to_lambda_frame(sym));
            Eigen::MatrixXcd wc = w.entries, cm = m_eps.entries;
            for (int col = 0; col < k; ++col) wc.col(col) *= d.c(col);
            for (int row = 0; row < k; ++row) cm.row(row) *= d.c(row);
            worst = std::max(worst, (wc - cm).cwiseAbs().maxCoeff());
        }
    }
    std::ostringstream ss;
    ss << "max entry defect " << worst;
    report(5, "Egorov exactness", worst < 1e-10, ss.str());
}

// 6. Toeplitz sanity block.
void criterion_6() {
    double worst_id = 0.0, worst_herm = 0.0, worst_mode = 0.0, worst_pos = 0.0;
    for (int k : {4, 8, 16, 32}) {
        const FourierSymbol one = builtin_symbol("one");
        const FloquetTorus t1 = torus_for(k, one, 0.8, 0.3);
        worst_id = std::max(worst_id, (toeplitz_matrix(t1, one).orthonormal.entries -
                                       Eigen::MatrixXcd::Identity(k, k))
                                          .cwiseAbs()
                                          .maxCoeff());

        for (const FourierSymbol& sym : {builtin_symbol("harper"), shifted_cos_p(2.0)}) {
            const ToeplitzResult tz = toeplitz_matrix(torus_for(k, sym, 0.8, 0.3), sym);
            worst_herm = std::max(worst_herm, (tz.orthonormal.entries -
                                               tz.orthonormal.entries.adjoint())
                                                  .cwiseAbs()
                                                  .maxCoeff());
        }

        for (auto [m, n] : {std::pair{0, 1}, {1, 0}, {1, 1}, {-1, 2}}) {
            FourierSymbol::Table tab;
            tab[{m, n}] = 1.0;
            const FourierSymbol mode =
                FourierSymbol::from_coefficients(std::move(tab), SymbolFrame::RealPlane);
            const FloquetTorus t = torus_for(k, mode, 0.8, 0.3);
            worst_mode = std::max(worst_mode, (toeplitz_matrix(t, mode).orthonormal.entries -
                                               mode_matrix_closed_form(t, m, n).entries)
                                                  .cwiseAbs()
                                                  .maxCoeff());
        }

        const FourierSymbol pos = shifted_cos_p(2.0);
        const ToeplitzResult tz = toeplitz_matrix(torus_for(k, pos, 0.8, 0.3), pos);
        worst_pos = std::min(worst_pos, hermitian_eigenvalues(tz.orthonormal.entries).front());
    }
    std::ostringstream ss;
    ss << "identity " << worst_id << ", hermiticity " << worst_herm << ", mode-oracle "
       << worst_mode << ", min eig of T(2+cos p) " << worst_pos;
    report(6, "Toeplitz sanity",
           worst_id < 1e-10 && worst_herm < 1e-10 && worst_mode < 1e-8 && worst_pos > -1e-9,
           ss.str());
}

// 7. Residual decay scan with the floor-limited policy: decay assertions
//    apply to residuals at least 10x above their quadrature floor.
void criterion_7() {
    bool pass = true;
    std::ostringstream detail;
    for (const char* name : {"harper", "cos_p"}) {
        const FourierSymbol sym = builtin_symbol(name);
        ScanConfig cfg;
        cfg.c = 0.0;
        cfg.d = 0.0;
        const CorrespondenceReport rep = decay_scan(sym, name, {8, 16, 24, 32, 48}, cfg);
        detail << name << ": ";
        double prev_signal = std::numeric_limits<double>::infinity();
        double r8 = -1.0, r32 = -1.0;
        bool any_signal = false;
        for (const ScanEntry& e : rep.entries) {
            if (!e.trusted) {
                pass = false;
                detail << "k=" << e.k << " untrusted! ";
                continue;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "k=%d %.2e%s ", e.k, e.residual,
                          e.floor_limited ? "(floor)" : "");
            detail << buf;
            if (e.k == 8) r8 = e.residual;
            if (e.k == 32) r32 = e.residual;
            if (!e.floor_limited) {
                any_signal = true;
                if (e.residual >= prev_signal) pass = false;  // strict decay of the signal
                prev_signal = e.residual;
            }
        }
        if (any_signal) {
            if (!rep.slope.has_value() || *rep.slope >= 0.0) pass = false;
            if (r8 > 0 && r32 > 0 && !(r32 < r8 / 10.0)) pass = false;
        } else {
            detail << "[all floor-limited] ";
        }
    }
    report(7, "residual decay with floor policy", pass, detail.str());
}

// 8. Spectral consequence: Hausdorff distance within the residual bound and
//    confinement of the harper spectra.
void criterion_8() {
    bool pass = true;
    double worst_slack = -1e9;
    for (const char* name : {"harper", "cos_p"}) {
        const FourierSymbol sym = builtin_symbol(name);
        for (int k : {8, 16, 32}) {
            const FloquetTorus t = torus_for(k, sym, 0.0, 0.0);
            const SpectrumComparison sp = spectrum_compare(t, sym);
            const double res = residual_complex_weyl(t, sym).residual;
            worst_slack = std::max(worst_slack, sp.hausdorff - res);
            if (sp.hausdorff > res + 1e-12) pass = false;
            if (std::string(name) == "harper") {
                if (sp.eigs_toeplitz.front() < -2.5 || sp.eigs_toeplitz.back() > 2.5 ||
                    sp.eigs_weyl.front() < -2.5 || sp.eigs_weyl.back() > 2.5) {
                    pass = false;
                }
            }
        }
    }
    std::ostringstream ss;
    ss << "max (hausdorff - residual) = " << worst_slack;
    report(8, "spectral consequence", pass, ss.str());
}

// 9. Heat-flow validation: multiplier vs an RK4 integration of the mode ODE,
//    and the factorial tail bound of the truncated inverse.
void criterion_9() {
    double worst_ode = 0.0, worst_tail = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int m = int(uniform(-3, 4)), n = int(uniform(-3, 4));
        const int k = 2 + int(uniform(0, 30));
        FourierSymbol::Table tab;
        tab[{m, n}] = 1.0;
        const FourierSymbol mode =
            FourierSymbol::from_coefficients(std::move(tab), SymbolFrame::RealPlane);
        const double lambda = -(n * n + 4.0 * kPi * kPi * m * m) / (4.0 * k);
        const int steps = int(std::max(20000.0, std::ceil(std::abs(lambda) * 4000.0)));
        double y = 1.0;
        const double h = 1.0 / steps;
        for (int s = 0; s < steps; ++s) {
            const double k1 = lambda * y;
            const double k2 = lambda * (y + 0.5 * h * k1);
            const double k3 = lambda * (y + 0.5 * h * k2);
            const double k4 = lambda * (y + h * k3);
            y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        const Complex got = heat_flow(mode, k).coefficient(m, n);
        worst_ode = std::max(worst_ode, std::abs(got - y) / std::abs(y));

        const int N = int(uniform(0, 7));
        const double x = (n * n + 4.0 * kPi * kPi * m * m) / (4.0 * k);
        double tail = std::pow(x, N + 1);
        for (int j = 2; j <= N + 1; ++j) tail /= j;
        const Complex round =
            inverse_heat_truncated(heat_flow(mode, k), k, N).coefficient(m, n);
        worst_tail = std::max(worst_tail, std::abs(round - 1.0) - tail);
    }
    std::ostringstream ss;
    ss << "max ODE mismatch " << worst_ode << ", max tail-bound excess " << worst_tail;
    report(9, "heat-flow validation", worst_ode < 1e-10 && worst_tail <= 1e-15, ss.str());
}

// 10. Determinism of scan outputs across thread counts and kernel policies.
void criterion_10() {
    const FourierSymbol h = builtin_symbol("harper");
    ScanConfig par;
    ScanConfig ser;
    ser.policy = ExecPolicy::Serial;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(2);
    const CorrespondenceReport a = decay_scan(h, "harper", {8, 16, 24}, par);
    omp_set_num_threads(1);
    const CorrespondenceReport b = decay_scan(h, "harper", {8, 16, 24}, par);
    omp_set_num_threads(saved);
    const CorrespondenceReport c = decay_scan(h, "harper", {8, 16, 24}, ser);
    const bool pass = a.to_json() == b.to_json() && a.to_json() == c.to_json() &&
                      a.to_csv() == b.to_csv() && a.to_csv() == c.to_csv();
    report(10, "bit-identical scan outputs", pass,
           pass ? "json+csv identical across 1/2 threads and serial kernel"
                : "outputs differ");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
