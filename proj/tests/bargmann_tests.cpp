// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"
#include "torusq/bargmann.hpp"
#include "torusq/errors.hpp"

using namespace torusq;
using torusq::testing::adaptive_simpson;
using torusq::testing::random_z;
using torusq::testing::uniform;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("universal constant") {
    CHECK(std::abs(BargmannDiagonal::c_phi1 - 1.0 / (std::sqrt(2.0) * std::pow(std::numbers::pi, 0.75))) <
          1e-16);
}

TEST_CASE("inversion identity c * c_tilde = 1") {
    for (int k : {1, 2, 4, 8, 16, 32, 64, 128}) {
        const FloquetTorus t = FloquetTorus::make(k, 0.77, 1.3);
        const BargmannDiagonal d = bargmann_constants(t);
        for (int l = 0; l < k; ++l) {
            CHECK(std::abs(d.c(l) * d.c_tilde(l) - 1.0) < 1e-12);
            CHECK(d.c(l) > 0.0);
            CHECK(std::isfinite(d.c_tilde(l)));
        }
    }
}

TEST_CASE("k=1 value with vanishing exponent") {
    const FloquetTorus t = FloquetTorus::make(1);
    const BargmannDiagonal d = bargmann_constants(t);
    CHECK(std::abs(d.c(0) - BargmannDiagonal::c_phi1 * std::sqrt(kTwoPi)) < 1e-15);
}

TEST_CASE("log-space robustness far beyond the double range") {
    // At k = 2048 the c_tilde exponent alone exceeds 700; the stored logs
    // stay finite and the identity still holds at log level.
    const FloquetTorus t = FloquetTorus::make(2048);
    const BargmannDiagonal d = bargmann_constants(t);
    for (int l : {0, 1024, 2047}) {
        CHECK(std::isfinite(d.log_c[l]));
        CHECK(std::isfinite(d.log_c_tilde[l]));
        CHECK(std::abs(d.log_c[l] + d.log_c_tilde[l]) < 1e-9);
    }
}

TEST_CASE("basis conversions: identity, diagonal, round trip") {
    const FloquetTorus t = FloquetTorus::make(6, 0.4, 0.9);
    const BargmannDiagonal d = bargmann_constants(t);

    const OperatorMatrix id = OperatorMatrix::identity(BasisFrame::Epsilon, 6);
    const OperatorMatrix id_e = conjugate_to_e_basis(id, d);
    CHECK((id_e.entries - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(id_e.basis == BasisFrame::E);

    OperatorMatrix diag = OperatorMatrix::zero(BasisFrame::Epsilon, 6);
    for (int l = 0; l < 6; ++l) diag.entries(l, l) = Complex(uniform(-1, 1), uniform(-1, 1));
    const OperatorMatrix diag_e = conjugate_to_e_basis(diag, d);
    CHECK((diag_e.entries - diag.entries).cwiseAbs().maxCoeff() < 1e-14);

    OperatorMatrix dense = OperatorMatrix::zero(BasisFrame::Epsilon, 6);
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) dense.entries(r, c) = Complex(uniform(-1, 1), uniform(-1, 1));
    }
    const OperatorMatrix round = conjugate_to_epsilon_basis(conjugate_to_e_basis(dense, d), d);
    CHECK((round.entries - dense.entries).cwiseAbs().maxCoeff() < 1e-13);

    CHECK_THROWS_AS(conjugate_to_e_basis(id_e, d), FrameError);
    CHECK_THROWS_AS(conjugate_to_epsilon_basis(diag, d), FrameError);
}

TEST_CASE("transform of exponentials: Gaussian mass at the origin") {
    for (int k : {1, 5, 12}) {
        const FloquetTorus t = FloquetTorus::make(k);
        const double want = BargmannDiagonal::c_phi1 * std::pow(double(k), 0.75) *
                            std::sqrt(kTwoPi / k);
        CHECK(std::abs(transform_exponential(t, 0.0, Complex(0, 0)) - want) < 1e-14 * want);
    }
}

TEST_CASE("transform of exponentials against direct Gaussian quadrature") {
    for (int k : {1, 4, 9}) {
        const FloquetTorus t = FloquetTorus::make(k);
        for (int trial = 0; trial < 5; ++trial) {
            const double nu = uniform(-2.5, 2.5);
            const Complex z = random_z(-0.7, 0.7);
            const double half_width = 20.0 / std::sqrt(double(k));
            auto integrand = [&](double x) {
                return std::exp(-0.5 * k * (z - x) * (z - x) + Complex(0.0, nu * x));
            };
            const Complex direct = BargmannDiagonal::c_phi1 * std::pow(double(k), 0.75) *
                                   adaptive_simpson(integrand, z.real() - half_width,
                                                    z.real() + half_width, 1e-13);
            const Complex closed = transform_exponential(t, nu, z);
            CHECK(std::abs(direct - closed) <= 1e-10 * std::abs(closed));
        }
    }
}

TEST_CASE("series over translates reproduces the scaled basis functions") {
    // sum_j v^{-kj} T(e^{i nu_j .})(z) = c_k^l e_l(z) with nu_j = l + jk + ck/(2 pi),
    // truncated at the same J on both sides.
    for (int k : {1, 2, 5, 8}) {
        const FloquetTorus t = FloquetTorus::make(k, 1.9, 0.8);
        const BargmannDiagonal d = bargmann_constants(t);
        for (int l = 0; l < k; ++l) {
            for (int trial = 0; trial < 50 / k + 2; ++trial) {
                const Complex z = random_z(0.0, 1.0);
                Complex series(0.0);
                for (int j = -t.J; j <= t.J; ++j) {
                    const double nu = l + double(j) * k + t.c * k / kTwoPi;
                    series += std::polar(1.0, -t.d * k * j) * transform_exponential(t, nu, z);
                }
                const Complex want = d.c(l) * eval_e(t, l, z);
                CHECK(std::abs(series - want) <= 1e-9 * std::abs(want));
            }
        }
    }
}
