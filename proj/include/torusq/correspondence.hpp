// SPDX-License-Identifier: Apache-2.0
//
// Comparison engine for the two quantizations.
//
// A multiplication operator compressed onto the theta basis and the complex
// Weyl operator of the heat-flowed symbol should agree up to an error that
// vanishes faster than any power of 1/k.  residual_complex_weyl measures
// their spectral-norm difference in the unit-norm frame; residual_real_weyl
// measures the same operator pair pulled to the distributional basis through
// the Bargmann diagonal.  The two numbers agree to roundoff because the frame
// change is an isometry.
//
// The symbol transport matters: a function f(p, q) on the torus, read as a
// function of z = p + iq in the Lambda frame, has its table reflected in m
// relative to the plane-frame table (the plane frame pairs m with e^{-2pi imy}
// while the Lambda frame pairs it with e^{+2pi im Im z}).  Feeding the
// unreflected table to the Weyl side produces O(1) residuals for any symbol
// that is not even in q; see equivalent_weyl_symbol.
//
// Every residual is reported next to the quadrature noise floor of the
// underlying Toeplitz assembly, and decay assertions apply only to residuals
// at least 10x above their floor; entries below that are flagged
// floor-limited.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusq/symbol.hpp"
#include "torusq/toeplitz.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

// Heat flow of a RealPlane Toeplitz symbol, read in the Lambda frame: the
// table is reflected m -> -m, retagged, and multiplied by the heat kernel.
FourierSymbol equivalent_weyl_symbol(const FourierSymbol& sym, int k);

struct ResidualReport {
    double residual = 0.0;
    double noise_floor = 0.0;
};

// || T(f) - Op(heat f) || in the unit-norm theta frame.
ResidualReport residual_complex_weyl(const FloquetTorus& torus, const FourierSymbol& sym,
                                     ExecPolicy policy = ExecPolicy::Parallel);

// The same difference conjugated to the distributional basis.
ResidualReport residual_real_weyl(const FloquetTorus& torus, const FourierSymbol& sym,
                                  ExecPolicy policy = ExecPolicy::Parallel);

struct SpectrumComparison {
    std::vector<double> eigs_toeplitz;
    std::vector<double> eigs_weyl;
    double hausdorff = 0.0;
};

// Sorted spectra of both operators in the unit-norm frame.  Requires a
// real-flagged symbol so both matrices are Hermitian.
SpectrumComparison spectrum_compare(const FloquetTorus& torus, const FourierSymbol& sym,
                                    ExecPolicy policy = ExecPolicy::Parallel);

struct ScanEntry {
    int k = 0;
    double residual = 0.0;
    double noise_floor = 0.0;
    bool floor_limited = false;  // residual below 10x its noise floor
    bool trusted = true;         // false when refinement failed at this level
    double hausdorff = 0.0;
    std::vector<double> spectrum_toeplitz;
    std::vector<double> spectrum_weyl;
};

struct CorrespondenceReport {
    std::string symbol_name;
    std::vector<ScanEntry> entries;
    // d(log residual)/dk fitted by least squares over trusted entries above
    // their floor; absent when fewer than three such levels exist.
    std::optional<double> slope;

    std::string to_json() const;
    std::string to_csv() const;
};

struct ScanConfig {
    double c = 0.0;
    double d = 0.0;
    int J = -1;   // -1 = per-level default
    int np = -1;
    int nq = -1;
    ExecPolicy policy = ExecPolicy::Parallel;
};

// Runs residual_complex_weyl over a strictly increasing list of at least
// three levels.  Levels whose quadrature fails refinement are reported
// untrusted instead of aborting the scan.
CorrespondenceReport decay_scan(const FourierSymbol& sym, const std::string& symbol_name,
                                const std::vector<int>& k_list, const ScanConfig& config = {});

}  // namespace torusq
