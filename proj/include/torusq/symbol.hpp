// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace torusq {

using Complex = std::complex<double>;

// Frame of a Fourier table.  Both frames describe (2pi, 1)-periodic functions
// through the same integer index pair (m, n); they differ in the sign
// convention of the second variable:
//
//   RealPlane :  f(x, y) = sum a_{m,n} e^{i n x} e^{-2 pi i m y}
//   LambdaPhi1:  b(z)    = sum b_{m,n} e^{i n Re z} e^{+2 pi i m Im z}
//
// The canonical map (x, y) -> x - i y carries one expansion into the other
// with an identical coefficient table, which is why frame changes below are
// pure retags.
enum class SymbolFrame { RealPlane, LambdaPhi1 };

// Truncated double Fourier table of a periodic symbol.  Value type; all
// operations on symbols are pure functions.
class FourierSymbol {
public:
    using Table = std::map<std::pair<int, int>, Complex>;

    FourierSymbol() = default;
    FourierSymbol(Table coeffs, int m_max, int n_max, SymbolFrame frame);

    // Builds the table from the given coefficients, deriving the truncation
    // bounds from the largest stored indices.
    static FourierSymbol from_coefficients(Table coeffs, SymbolFrame frame);

    const Table& coefficients() const { return coeffs_; }
    Complex coefficient(int m, int n) const;
    int m_max() const { return m_max_; }
    int n_max() const { return n_max_; }
    SymbolFrame frame() const { return frame_; }

    // True when the table satisfies a_{-m,-n} = conj(a_{m,n}) to 1e-14,
    // i.e. the symbol is a real-valued function.
    bool is_real() const { return real_; }

    double max_abs_coefficient() const;

private:
    Table coeffs_;
    int m_max_ = 0;
    int n_max_ = 0;
    SymbolFrame frame_ = SymbolFrame::RealPlane;
    bool real_ = false;
};

// Discrete Fourier analysis of samples on the uniform grid
// x_i = 2 pi i / nx, y_j = j / ny (row-major index i*ny + j).
// Requires nx > 2*n_max and ny > 2*m_max so retained modes are alias-free.
FourierSymbol sample_to_fourier(const std::vector<Complex>& samples, int nx, int ny,
                                int m_max, int n_max);

// Evaluation in the symbol's own frame; (x, y) is (Re z, Im z) for
// LambdaPhi1 tables.
Complex evaluate(const FourierSymbol& sym, double x, double y);
Complex evaluate(const FourierSymbol& sym, Complex z);

// Time-1 heat flow at level k: every coefficient is multiplied by
// exp(-(n^2 + 4 pi^2 m^2)/(4k)).  The result is tagged LambdaPhi1.
FourierSymbol heat_flow(const FourierSymbol& sym, int k);

// Degree-N truncation of the inverse heat multiplier,
// sum_{j<=N} ((n^2 + 4 pi^2 m^2)/(4k))^j / j!.  Frame is preserved.
FourierSymbol inverse_heat_truncated(const FourierSymbol& sym, int k, int trunc_order);

// Table of the complex-conjugate function: out(m, n) = conj(in(-m, -n)).
// Defined on LambdaPhi1 tables only.
FourierSymbol conjugate_symbol(const FourierSymbol& sym);

// Frame retags (coefficient tables are bit-identical, see SymbolFrame).
FourierSymbol to_lambda_frame(const FourierSymbol& sym);
FourierSymbol to_plane_frame(const FourierSymbol& sym);

// f(x, y) -> f(x, -y): reflects the table m -> -m, same frame.  This is the
// table-level difference between reading a function of z = x + iy in the two
// frames, and is what the Toeplitz-to-Weyl symbol transport needs.
FourierSymbol reflect_y(const FourierSymbol& sym);

// Named built-in symbols: "one", "cos_p", "cos_q", "sin_q",
// "harper" (= cos p + cos 2 pi q).
FourierSymbol builtin_symbol(const std::string& name);

// Plain-text coefficient file: a "frame=real_plane|lambda_phi1" header line
// followed by "m n re im" lines.  '#' starts a comment.
FourierSymbol read_symbol_file(const std::string& path);

}  // namespace torusq
