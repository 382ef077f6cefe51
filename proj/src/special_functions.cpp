// SPDX-License-Identifier: Apache-2.0

#include "torusq/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torusq {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrtPi = 0.564189583547756286948;  // 1/sqrt(pi)
}  // namespace

double erfcx(double x) {
    if (x < -26.0) {
        throw std::overflow_error("erfcx: argument too negative for double range");
    }
    if (x <= 26.0) {
        // exp(x^2) and erfc(x) are both representable here; the product is exact
        // to a few ulp of std::erfc.
        return std::exp(x * x) * std::erfc(x);
    }
    // Asymptotic series erfcx(x) ~ 1/(x sqrt(pi)) sum (-1)^n (2n-1)!!/(2x^2)^n.
    const double ix2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= 8; ++n) {
        term *= -(2 * n - 1) * ix2;
        sum += term;
    }
    return kInvSqrtPi / x * sum;
}

double log_gauss_linear_integral(double mu, double k) {
    if (!(k > 0.0)) {
        throw std::invalid_argument("log_gauss_linear_integral: k must be positive");
    }
    // Reflection q -> 1-q maps mu to -mu-k; use it to keep mu >= -k/2 so the
    // completed-square argument a = mu/sqrt(k) stays >= -sqrt(k)/2.
    if (mu < -0.5 * k) {
        return (-2.0 * mu - k) + log_gauss_linear_integral(-mu - k, k);
    }
    const double sk = std::sqrt(k);
    const double a = mu / sk;
    const double b = (k + mu) / sk;
    const double half_log_pref = 0.5 * std::log(kPi / (4.0 * k));
    if (a >= 0.0) {
        // I = sqrt(pi/4k) [erfcx(a) - e^{-(2mu+k)} erfcx(b)]; the subtracted
        // term is at most ~e^{-k} of the first, so no cancellation.
        const double diff = erfcx(a) - std::exp(-(2.0 * mu + k)) * erfcx(b);
        return half_log_pref + std::log(diff);
    }
    // -sqrt(k)/2 <= a < 0: erf(b) - erf(a) = erf(b) + erf(-a), both positive.
    const double diff = std::erf(b) + std::erf(-a);
    return half_log_pref + a * a + std::log(diff);
}

Quadrature1D gauss_legendre_01(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre_01: need at least one node");
    }
    Quadrature1D q;
    q.nodes.resize(n);
    q.weights.resize(n);
    // Newton iteration on P_n over [-1,1], then map to [0,1].
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        q.nodes[i] = 0.5 * (1.0 - x);
        q.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        q.weights[i] = 0.5 * w;
        q.weights[n - 1 - i] = 0.5 * w;
    }
    return q;
}

}  // namespace torusq
