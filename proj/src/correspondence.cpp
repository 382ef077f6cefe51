// SPDX-License-Identifier: Apache-2.0

#include "torusq/correspondence.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "torusq/bargmann.hpp"
#include "torusq/errors.hpp"

namespace torusq {

namespace {

// A residual counts as genuine decay signal only when it clears its own
// quadrature noise floor by this factor.
constexpr double kFloorFactor = 10.0;
constexpr double kResidualEpsilon = 1e-13;

struct ResidualPieces {
    ToeplitzResult toeplitz;
    OperatorMatrix weyl_orthonormal;  // ENormalized
};

ResidualPieces build_pair(const FloquetTorus& torus, const FourierSymbol& sym,
                          ExecPolicy policy) {
    ResidualPieces p{toeplitz_matrix(torus, sym, policy), {}};
    const FourierSymbol b = equivalent_weyl_symbol(sym, torus.k);
    p.weyl_orthonormal = to_normalized_frame(quantize_weyl_complex(torus, b), torus);
    return p;
}

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

FourierSymbol equivalent_weyl_symbol(const FourierSymbol& sym, int k) {
    if (sym.frame() != SymbolFrame::RealPlane) {
        throw FrameError("equivalent_weyl_symbol: expected a RealPlane symbol");
    }
    return heat_flow(to_lambda_frame(reflect_y(sym)), k);
}

ResidualReport residual_complex_weyl(const FloquetTorus& torus, const FourierSymbol& sym,
                                     ExecPolicy policy) {
    const ResidualPieces p = build_pair(torus, sym, policy);
    return {spectral_norm(p.toeplitz.orthonormal.entries - p.weyl_orthonormal.entries),
            p.toeplitz.noise_floor};
}

ResidualReport residual_real_weyl(const FloquetTorus& torus, const FourierSymbol& sym,
                                  ExecPolicy policy) {
    const ToeplitzResult tz = toeplitz_matrix(torus, sym, policy);
    const BargmannDiagonal diag = bargmann_constants(torus);
    const OperatorMatrix t_eps = conjugate_to_epsilon_basis(tz.raw, diag);
    const FourierSymbol b = equivalent_weyl_symbol(sym, torus.k);
    const OperatorMatrix a_eps = quantize_weyl(torus, to_plane_frame(b));
    return {spectral_norm(t_eps.entries - a_eps.entries), tz.noise_floor};
}

SpectrumComparison spectrum_compare(const FloquetTorus& torus, const FourierSymbol& sym,
                                    ExecPolicy policy) {
    if (!sym.is_real()) {
        throw DomainError("spectrum_compare: symbol must be real-valued");
    }
    const ResidualPieces p = build_pair(torus, sym, policy);
    SpectrumComparison s;
    s.eigs_toeplitz = hermitian_eigenvalues(p.toeplitz.orthonormal.entries);
    s.eigs_weyl = hermitian_eigenvalues(p.weyl_orthonormal.entries);
    s.hausdorff = hausdorff_distance(s.eigs_toeplitz, s.eigs_weyl);
    return s;
}

CorrespondenceReport decay_scan(const FourierSymbol& sym, const std::string& symbol_name,
                                const std::vector<int>& k_list, const ScanConfig& config) {
    if (k_list.size() < 3) {
        throw PreconditionError("decay_scan: need at least three levels");
    }
    for (size_t i = 1; i < k_list.size(); ++i) {
        if (k_list[i] <= k_list[i - 1]) {
            throw PreconditionError("decay_scan: k_list must be strictly increasing");
        }
    }
    CorrespondenceReport report;
    report.symbol_name = symbol_name;
    for (int k : k_list) {
        const FloquetTorus torus = FloquetTorus::make(k, config.c, config.d, config.J, config.np,
                                                      config.nq, sym.m_max(), sym.n_max());
        ScanEntry entry;
        entry.k = k;
        try {
            const ResidualPieces p = build_pair(torus, sym, config.policy);
            entry.residual =
                spectral_norm(p.toeplitz.orthonormal.entries - p.weyl_orthonormal.entries);
            entry.noise_floor = p.toeplitz.noise_floor;
            entry.floor_limited =
                entry.residual < std::max(kFloorFactor * entry.noise_floor, kResidualEpsilon);
            if (sym.is_real()) {
                entry.spectrum_toeplitz = hermitian_eigenvalues(p.toeplitz.orthonormal.entries);
                entry.spectrum_weyl = hermitian_eigenvalues(p.weyl_orthonormal.entries);
                entry.hausdorff = hausdorff_distance(entry.spectrum_toeplitz, entry.spectrum_weyl);
            } else {
                entry.hausdorff = std::numeric_limits<double>::quiet_NaN();
            }
        } catch (const AccuracyError& e) {
            entry.trusted = false;
            entry.residual = std::numeric_limits<double>::quiet_NaN();
            entry.noise_floor = e.achieved;
            entry.floor_limited = true;
            entry.hausdorff = std::numeric_limits<double>::quiet_NaN();
        }
        report.entries.push_back(std::move(entry));
    }
    // Least-squares slope of log residual against k over usable levels.
    std::vector<std::pair<double, double>> pts;
    for (const ScanEntry& e : report.entries) {
        if (e.trusted && !e.floor_limited && e.residual > 0.0) {
            pts.emplace_back(double(e.k), std::log(e.residual));
        }
    }
    if (pts.size() >= 3) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = double(pts.size());
        report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return report;
}

std::string CorrespondenceReport::to_json() const {
    nlohmann::ordered_json kv = nlohmann::ordered_json::array();
    nlohmann::ordered_json res = nlohmann::ordered_json::array();
    nlohmann::ordered_json fl = nlohmann::ordered_json::array();
    nlohmann::ordered_json lim = nlohmann::ordered_json::array();
    nlohmann::ordered_json tr = nlohmann::ordered_json::array();
    nlohmann::ordered_json hd = nlohmann::ordered_json::array();
    nlohmann::ordered_json spec_t = nlohmann::ordered_json::array();
    nlohmann::ordered_json spec_w = nlohmann::ordered_json::array();
    for (const ScanEntry& e : entries) {
        kv.push_back(e.k);
        if (std::isfinite(e.residual)) {
            res.push_back(e.residual);
        } else {
            res.push_back(nullptr);
        }
        fl.push_back(e.noise_floor);
        lim.push_back(e.floor_limited);
        tr.push_back(e.trusted);
        if (std::isfinite(e.hausdorff)) {
            hd.push_back(e.hausdorff);
        } else {
            hd.push_back(nullptr);
        }
        spec_t.push_back(e.spectrum_toeplitz);
        spec_w.push_back(e.spectrum_weyl);
    }
    nlohmann::ordered_json j;
    j["symbol"] = symbol_name;
    j["k_values"] = std::move(kv);
    j["residuals"] = std::move(res);
    j["floor"] = std::move(fl);
    j["floor_limited"] = std::move(lim);
    j["trusted"] = std::move(tr);
    j["hausdorff"] = std::move(hd);
    if (slope) {
        j["slope"] = *slope;
    } else {
        j["slope"] = nullptr;
    }
    j["spectra"] = {{"toeplitz", spec_t}, {"weyl", spec_w}};
    return j.dump(2) + "\n";
}

std::string CorrespondenceReport::to_csv() const {
    std::string out = "k,residual,floor,hausdorff\n";
    for (const ScanEntry& e : entries) {
        out += std::to_string(e.k);
        out += ',';
        append_double(out, e.residual);
        out += ',';
        append_double(out, e.noise_floor);
        out += ',';
        append_double(out, e.hausdorff);
        out += '\n';
    }
    return out;
}

}  // namespace torusq
