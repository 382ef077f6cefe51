// SPDX-License-Identifier: Apache-2.0

#include "torusq/floquet.hpp"

#include <cmath>
#include <numbers>

#include "torusq/errors.hpp"

namespace torusq {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}
}  // namespace

int default_theta_width(int k) {
    // Series terms decay like exp(-k j^2/2 + B j) with B <= 4k on the strip
    // |Im z| <= 2; J is chosen so the tail exponent is below -100, and never
    // below the coarser scale 4/sqrt(k) (l_max/k + 2) that matters at small k.
    const double tail = std::ceil(4.0 + std::sqrt(16.0 + 200.0 / k));
    const double coarse = std::ceil(4.0 / std::sqrt(double(k)) * ((k - 1.0) / k + 2.0));
    return static_cast<int>(std::max({6.0, coarse, tail}));
}

FloquetTorus FloquetTorus::make(int k, double c, double d, int J, int np, int nq,
                                int m_max, int n_max) {
    if (k < 1) throw PreconditionError("FloquetTorus: k must be at least 1");
    FloquetTorus t;
    t.k = k;
    t.c = reduce_angle(c);
    t.d = reduce_angle(d);
    t.J = (J > 0) ? J : default_theta_width(k);
    const int sqk = static_cast<int>(std::ceil(std::sqrt(double(k))));
    t.np = (np > 0) ? np : 4 * k + 12 * sqk + 2 * std::max(0, n_max) + 16;
    t.nq = (nq > 0) ? nq : 4 * k + 2 * static_cast<int>(std::ceil(std::numbers::pi * std::max(0, m_max))) + 24;
    if (t.J < 1) throw PreconditionError("FloquetTorus: J must be at least 1");
    if (t.np < 4 * k || t.nq < 4 * k) {
        throw PreconditionError("FloquetTorus: quadrature resolution must be at least 4k");
    }
    return t;
}

FloquetTorus FloquetTorus::refined() const {
    FloquetTorus t = *this;
    t.np *= 2;
    t.nq *= 2;
    return t;
}

}  // namespace torusq
