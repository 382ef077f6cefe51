// SPDX-License-Identifier: Apache-2.0

#include "torusq/symbol.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "torusq/errors.hpp"

namespace torusq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool table_is_real(const FourierSymbol::Table& t, double scale) {
    const double tol = 1e-14 * std::max(1.0, scale);
    for (const auto& [mn, a] : t) {
        auto it = t.find({-mn.first, -mn.second});
        const Complex mirror = (it == t.end()) ? Complex(0.0) : it->second;
        if (std::abs(mirror - std::conj(a)) > tol) return false;
    }
    return true;
}

FourierSymbol with_multiplier(const FourierSymbol& sym, SymbolFrame out_frame,
                              double (*mult)(int, int, int, int), int k, int order) {
    FourierSymbol::Table out;
    for (const auto& [mn, a] : sym.coefficients()) {
        out[mn] = a * mult(mn.first, mn.second, k, order);
    }
    return FourierSymbol(std::move(out), sym.m_max(), sym.n_max(), out_frame);
}

double mode_laplace_eigenvalue(int m, int n) {
    return static_cast<double>(n) * n + 4.0 * std::numbers::pi * std::numbers::pi * m * m;
}

double heat_multiplier(int m, int n, int k, int /*order*/) {
    return std::exp(-mode_laplace_eigenvalue(m, n) / (4.0 * k));
}

double inverse_heat_multiplier(int m, int n, int k, int order) {
    const double x = mode_laplace_eigenvalue(m, n) / (4.0 * k);
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= order; ++j) {
        term *= x / j;
        sum += term;
    }
    return sum;
}

}  // namespace

FourierSymbol::FourierSymbol(Table coeffs, int m_max, int n_max, SymbolFrame frame)
    : coeffs_(std::move(coeffs)), m_max_(m_max), n_max_(n_max), frame_(frame) {
    double scale = 0.0;
    for (const auto& [mn, a] : coeffs_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InputError("FourierSymbol: non-finite coefficient");
        }
        if (std::abs(mn.first) > m_max_ || std::abs(mn.second) > n_max_) {
            throw PreconditionError("FourierSymbol: index outside truncation bounds");
        }
        scale = std::max(scale, std::abs(a));
    }
    real_ = table_is_real(coeffs_, scale);
}

FourierSymbol FourierSymbol::from_coefficients(Table coeffs, SymbolFrame frame) {
    int mm = 0, nm = 0;
    for (const auto& [mn, a] : coeffs) {
        mm = std::max(mm, std::abs(mn.first));
        nm = std::max(nm, std::abs(mn.second));
    }
    return FourierSymbol(std::move(coeffs), mm, nm, frame);
}

Complex FourierSymbol::coefficient(int m, int n) const {
    auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

double FourierSymbol::max_abs_coefficient() const {
    double s = 0.0;
    for (const auto& [mn, a] : coeffs_) s = std::max(s, std::abs(a));
    return s;
}

FourierSymbol sample_to_fourier(const std::vector<Complex>& samples, int nx, int ny,
                                int m_max, int n_max) {
    if (m_max < 0 || n_max < 0) {
        throw PreconditionError("sample_to_fourier: truncation bounds must be non-negative");
    }
    if (nx <= 2 * n_max || ny <= 2 * m_max) {
        throw PreconditionError("sample_to_fourier: grid too small for requested bounds");
    }
    if (samples.size() != static_cast<size_t>(nx) * static_cast<size_t>(ny)) {
        throw InputError("sample_to_fourier: sample count does not match grid");
    }
    for (const Complex& s : samples) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw InputError("sample_to_fourier: non-finite sample");
        }
    }
    // a_{m,n} = (1/(nx ny)) sum f(x_i, y_j) e^{-i n x_i} e^{+2 pi i m y_j}
    FourierSymbol::Table table;
    for (int m = -m_max; m <= m_max; ++m) {
        for (int n = -n_max; n <= n_max; ++n) {
            Complex acc(0.0);
            for (int i = 0; i < nx; ++i) {
                const double x = kTwoPi * i / nx;
                Complex row(0.0);
                for (int j = 0; j < ny; ++j) {
                    const double y = static_cast<double>(j) / ny;
                    row += samples[static_cast<size_t>(i) * ny + j] *
                           std::polar(1.0, kTwoPi * m * y);
                }
                acc += row * std::polar(1.0, -n * x);
            }
            table[{m, n}] = acc / (static_cast<double>(nx) * ny);
        }
    }
    return FourierSymbol(std::move(table), m_max, n_max, SymbolFrame::RealPlane);
}

Complex evaluate(const FourierSymbol& sym, double x, double y) {
    const double ysign = (sym.frame() == SymbolFrame::RealPlane) ? -1.0 : 1.0;
    Complex acc(0.0);
    for (const auto& [mn, a] : sym.coefficients()) {
        acc += a * std::polar(1.0, mn.second * x + ysign * kTwoPi * mn.first * y);
    }
    return acc;
}

Complex evaluate(const FourierSymbol& sym, Complex z) {
    return evaluate(sym, z.real(), z.imag());
}

FourierSymbol heat_flow(const FourierSymbol& sym, int k) {
    if (k < 1) throw PreconditionError("heat_flow: k must be at least 1");
    return with_multiplier(sym, SymbolFrame::LambdaPhi1, heat_multiplier, k, 0);
}

FourierSymbol inverse_heat_truncated(const FourierSymbol& sym, int k, int trunc_order) {
    if (k < 1) throw PreconditionError("inverse_heat_truncated: k must be at least 1");
    if (trunc_order < 0) throw PreconditionError("inverse_heat_truncated: order must be >= 0");
    return with_multiplier(sym, sym.frame(), inverse_heat_multiplier, k, trunc_order);
}

FourierSymbol conjugate_symbol(const FourierSymbol& sym) {
    if (sym.frame() != SymbolFrame::LambdaPhi1) {
        throw FrameError("conjugate_symbol: expected a LambdaPhi1 table");
    }
    FourierSymbol::Table out;
    for (const auto& [mn, a] : sym.coefficients()) {
        out[{-mn.first, -mn.second}] = std::conj(a);
    }
    return FourierSymbol(std::move(out), sym.m_max(), sym.n_max(), sym.frame());
}

FourierSymbol to_lambda_frame(const FourierSymbol& sym) {
    if (sym.frame() != SymbolFrame::RealPlane) {
        throw FrameError("to_lambda_frame: expected a RealPlane table");
    }
    return FourierSymbol(sym.coefficients(), sym.m_max(), sym.n_max(), SymbolFrame::LambdaPhi1);
}

FourierSymbol to_plane_frame(const FourierSymbol& sym) {
    if (sym.frame() != SymbolFrame::LambdaPhi1) {
        throw FrameError("to_plane_frame: expected a LambdaPhi1 table");
    }
    return FourierSymbol(sym.coefficients(), sym.m_max(), sym.n_max(), SymbolFrame::RealPlane);
}

FourierSymbol reflect_y(const FourierSymbol& sym) {
    FourierSymbol::Table out;
    for (const auto& [mn, a] : sym.coefficients()) {
        out[{-mn.first, mn.second}] = a;
    }
    return FourierSymbol(std::move(out), sym.m_max(), sym.n_max(), sym.frame());
}

FourierSymbol builtin_symbol(const std::string& name) {
    FourierSymbol::Table t;
    if (name == "one") {
        t[{0, 0}] = 1.0;
    } else if (name == "cos_p") {
        t[{0, 1}] = 0.5;
        t[{0, -1}] = 0.5;
    } else if (name == "cos_q") {
        t[{1, 0}] = 0.5;
        t[{-1, 0}] = 0.5;
    } else if (name == "sin_q") {
        t[{1, 0}] = Complex(0.0, 0.5);
        t[{-1, 0}] = Complex(0.0, -0.5);
    } else if (name == "harper") {
        t[{0, 1}] = 0.5;
        t[{0, -1}] = 0.5;
        t[{1, 0}] = 0.5;
        t[{-1, 0}] = 0.5;
    } else {
        throw InputError("unknown built-in symbol: " + name);
    }
    return FourierSymbol::from_coefficients(std::move(t), SymbolFrame::RealPlane);
}

FourierSymbol read_symbol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open symbol file: " + path);
    SymbolFrame frame = SymbolFrame::RealPlane;
    bool have_frame = false;
    FourierSymbol::Table t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.rfind("frame=", 0) == 0) {
            const std::string f = first.substr(6);
            if (f == "real_plane") {
                frame = SymbolFrame::RealPlane;
            } else if (f == "lambda_phi1") {
                frame = SymbolFrame::LambdaPhi1;
            } else {
                throw InputError(path + ": unknown frame '" + f + "'");
            }
            have_frame = true;
            continue;
        }
        int m = 0, n = 0;
        double re = 0.0, im = 0.0;
        char* end = nullptr;
        m = static_cast<int>(std::strtol(first.c_str(), &end, 10));
        if (end == first.c_str() || *end != '\0' || !(ls >> n >> re >> im)) {
            throw InputError(path + ": malformed line " + std::to_string(lineno));
        }
        t[{m, n}] += Complex(re, im);
    }
    if (!have_frame) {
        throw InputError(path + ": missing 'frame=' header line");
    }
    return FourierSymbol::from_coefficients(std::move(t), frame);
}

}  // namespace torusq
