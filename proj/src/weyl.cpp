// SPDX-License-Identifier: Apache-2.0

#include "torusq/weyl.hpp"

#include <cmath>
#include <numbers>

#include "torusq/bargmann.hpp"
#include "torusq/errors.hpp"

namespace torusq {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Euclidean division so that l' = l + n - r k lands in {0, ..., k-1}.
inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct TranslationColumn {
    int target;      // l'
    Complex factor;  // modulus-one phase
};

TranslationColumn translation_column(const FloquetTorus& torus, int m, int n, int l) {
    const int r = floor_div(l + n, torus.k);
    const int lp = l + n - r * torus.k;
    const double phase = -kPi * m * n / torus.k - m * torus.c - kTwoPi * l * m / torus.k +
                         torus.d * torus.k * r;
    return {lp, std::polar(1.0, phase)};
}
}  // namespace

OperatorMatrix translation_matrix(const FloquetTorus& torus, int m, int n) {
    OperatorMatrix t = OperatorMatrix::zero(BasisFrame::Epsilon, torus.k);
    for (int l = 0; l < torus.k; ++l) {
        const TranslationColumn col = translation_column(torus, m, n, l);
        t.entries(col.target, l) = col.factor;
    }
    return t;
}

OperatorMatrix quantize_weyl(const FloquetTorus& torus, const FourierSymbol& sym) {
    if (sym.frame() != SymbolFrame::RealPlane) {
        throw FrameError("quantize_weyl: expected a RealPlane symbol");
    }
    OperatorMatrix acc = OperatorMatrix::zero(BasisFrame::Epsilon, torus.k);
    // std::map iterates lexicographically in (m, n): reproducible order.
    for (const auto& [mn, a] : sym.coefficients()) {
        for (int l = 0; l < torus.k; ++l) {
            const TranslationColumn col = translation_column(torus, mn.first, mn.second, l);
            acc.entries(col.target, l) += a * col.factor;
        }
    }
    return acc;
}

OperatorMatrix quantize_weyl_complex(const FloquetTorus& torus, const FourierSymbol& sym) {
    if (sym.frame() != SymbolFrame::LambdaPhi1) {
        throw FrameError("quantize_weyl_complex: expected a LambdaPhi1 symbol");
    }
    const OperatorMatrix eps = quantize_weyl(torus, to_plane_frame(sym));
    return conjugate_to_e_basis(eps, bargmann_constants(torus));
}

Complex apply_complex_weyl_pointwise(const FloquetTorus& torus, const FourierSymbol& sym,
                                     const Evaluable& f, Complex z) {
    if (sym.frame() != SymbolFrame::LambdaPhi1) {
        throw FrameError("apply_complex_weyl_pointwise: expected a LambdaPhi1 symbol");
    }
    const double k = torus.k;
    Complex acc(0.0);
    for (const auto& [mn, b] : sym.coefficients()) {
        const int m = mn.first;
        const int n = mn.second;
        const Complex shift(-kTwoPi * m / k, n / k);
        const Complex phase =
            std::exp(Complex(0.0, -kPi * m * n / k) - n * n / (2.0 * k) + Complex(0.0, 1.0) * double(n) * z);
        acc += b * phase * f(z + shift);
    }
    return acc;
}

}  // namespace torusq
