// SPDX-License-Identifier: Apache-2.0

#include "torusq/cli.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "torusq/correspondence.hpp"
#include "torusq/errors.hpp"

namespace torusq {

namespace {

void format_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << content;
    if (!out) throw InputError("failed writing output file: " + path);
}

FourierSymbol truncate_table(const FourierSymbol& sym, int m_max, int n_max) {
    const int mm = (m_max >= 0) ? m_max : sym.m_max();
    const int nm = (n_max >= 0) ? n_max : sym.n_max();
    FourierSymbol::Table t;
    for (const auto& [mn, a] : sym.coefficients()) {
        if (std::abs(mn.first) <= mm && std::abs(mn.second) <= nm) t[mn] = a;
    }
    return FourierSymbol(std::move(t), mm, nm, sym.frame());
}

struct LoadedSymbol {
    FourierSymbol sym;
    std::string name;
};

LoadedSymbol load_symbol(const RunConfig& cfg) {
    const bool named = !cfg.symbol_name.empty();
    const bool from_file = !cfg.symbol_file.empty();
    if (named == from_file) {
        throw PreconditionError("exactly one symbol source (--symbol or --symbol-file) required");
    }
    LoadedSymbol s{named ? builtin_symbol(cfg.symbol_name) : read_symbol_file(cfg.symbol_file),
                   named ? cfg.symbol_name : cfg.symbol_file};
    if (cfg.m_max >= 0 || cfg.n_max >= 0) {
        s.sym = truncate_table(s.sym, cfg.m_max, cfg.n_max);
    }
    return s;
}

FloquetTorus torus_for(const RunConfig& cfg, const FourierSymbol& sym, int k) {
    return FloquetTorus::make(k, cfg.c, cfg.d, cfg.J, cfg.np, cfg.nq, sym.m_max(), sym.n_max());
}

std::string json_error(const char* kind, const std::string& message) {
    nlohmann::json j{{"error", kind}, {"message", message}};
    return j.dump() + "\n";
}

int run_quantize(const RunConfig& cfg) {
    const LoadedSymbol s = load_symbol(cfg);
    if (s.sym.frame() != SymbolFrame::RealPlane) {
        throw FrameError("quantize expects a real_plane symbol file");
    }
    const FloquetTorus torus = torus_for(cfg, s.sym, cfg.k);
    const ExecPolicy pol = cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    const ToeplitzResult tz = toeplitz_matrix(torus, s.sym, pol);
    const FourierSymbol b = equivalent_weyl_symbol(s.sym, torus.k);
    const OperatorMatrix weyl =
        to_normalized_frame(quantize_weyl_complex(torus, b), torus);
    const std::string prefix =
        cfg.output.empty() ? ("quantize_" + s.name + "_k" + std::to_string(cfg.k)) : cfg.output;
    write_matrix_file(prefix + "_toeplitz.mat", tz.orthonormal, "real_plane");
    write_matrix_file(prefix + "_weyl.mat", weyl, "lambda_phi1");
    std::cout << "wrote " << prefix << "_toeplitz.mat and " << prefix
              << "_weyl.mat (noise floor " << tz.noise_floor << ")\n";
    return 0;
}

int run_compare(const RunConfig& cfg) {
    const LoadedSymbol s = load_symbol(cfg);
    const FloquetTorus torus = torus_for(cfg, s.sym, cfg.k);
    const ExecPolicy pol = cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    const ResidualReport complex_side = residual_complex_weyl(torus, s.sym, pol);
    const ResidualReport real_side = residual_real_weyl(torus, s.sym, pol);
    std::string content;
    if (cfg.format == RunConfig::Format::Json) {
        nlohmann::ordered_json j;
        j["symbol"] = s.name;
        j["k"] = cfg.k;
        j["complex_weyl_residual"] = complex_side.residual;
        j["real_weyl_residual"] = real_side.residual;
        j["floor"] = complex_side.noise_floor;
        content = j.dump(2) + "\n";
    } else {
        content = "k,complex_weyl_residual,real_weyl_residual,floor\n" + std::to_string(cfg.k);
        for (double v : {complex_side.residual, real_side.residual, complex_side.noise_floor}) {
            content += ',';
            format_double(content, v);
        }
        content += '\n';
    }
    if (cfg.output.empty()) {
        std::cout << content;
    } else {
        write_text_file(cfg.output, content);
    }
    std::cout << "residual " << complex_side.residual << " (floor " << complex_side.noise_floor
              << ")\n";
    return 0;
}

int run_scan(const RunConfig& cfg) {
    const LoadedSymbol s = load_symbol(cfg);
    ScanConfig sc;
    sc.c = cfg.c;
    sc.d = cfg.d;
    sc.J = cfg.J;
    sc.np = cfg.np;
    sc.nq = cfg.nq;
    sc.policy = cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    const CorrespondenceReport report = decay_scan(s.sym, s.name, cfg.k_list, sc);
    const bool json = (cfg.format == RunConfig::Format::Json);
    const std::string content = json ? report.to_json() : report.to_csv();
    const std::string path =
        cfg.output.empty() ? ("scan_" + s.name + (json ? ".json" : ".csv")) : cfg.output;
    write_text_file(path, content);
    std::cout << "wrote " << path << "\n";
    for (const ScanEntry& e : report.entries) {
        std::cout << "  k=" << e.k << " residual=" << e.residual << " floor=" << e.noise_floor
                  << (e.floor_limited ? " (floor-limited)" : "") << (e.trusted ? "" : " (untrusted)")
                  << "\n";
    }
    return 0;
}

int run_spectrum(const RunConfig& cfg) {
    const LoadedSymbol s = load_symbol(cfg);
    const FloquetTorus torus = torus_for(cfg, s.sym, cfg.k);
    const ExecPolicy pol = cfg.serial ? ExecPolicy::Serial : ExecPolicy::Parallel;
    const SpectrumComparison sp = spectrum_compare(torus, s.sym, pol);
    std::string content;
    if (cfg.format == RunConfig::Format::Json) {
        nlohmann::ordered_json j;
        j["symbol"] = s.name;
        j["k"] = cfg.k;
        j["eigs_toeplitz"] = sp.eigs_toeplitz;
        j["eigs_weyl"] = sp.eigs_weyl;
        j["hausdorff"] = sp.hausdorff;
        content = j.dump(2) + "\n";
    } else {
        content = "index,eig_toeplitz,eig_weyl\n";
        for (size_t i = 0; i < sp.eigs_toeplitz.size(); ++i) {
            content += std::to_string(i);
            content += ',';
            format_double(content, sp.eigs_toeplitz[i]);
            content += ',';
            format_double(content, sp.eigs_weyl[i]);
            content += '\n';
        }
    }
    const std::string path = cfg.output.empty()
                                 ? ("spectrum_" + s.name + "_k" + std::to_string(cfg.k) +
                                    (cfg.format == RunConfig::Format::Json ? ".json" : ".csv"))
                                 : cfg.output;
    write_text_file(path, content);
    std::cout << "wrote " << path << " (hausdorff " << sp.hausdorff << ")\n";
    return 0;
}

}  // namespace

int run(const RunConfig& cfg) {
    if (const char* threads = std::getenv("TORUSQ_THREADS")) {
        const int n = std::atoi(threads);
        if (n > 0) omp_set_num_threads(n);
    }
    try {
        switch (cfg.command) {
            case RunConfig::Command::Quantize:
                return run_quantize(cfg);
            case RunConfig::Command::Compare:
                return run_compare(cfg);
            case RunConfig::Command::Scan:
                return run_scan(cfg);
            case RunConfig::Command::Spectrum:
                return run_spectrum(cfg);
        }
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << json_error("precondition", e.what());
        return 2;
    } catch (const InputError& e) {
        std::cerr << json_error("input", e.what());
        return 3;
    } catch (const AccuracyError& e) {
        std::cerr << json_error("accuracy", e.what());
        return 4;
    } catch (const FrameError& e) {
        std::cerr << json_error("frame", e.what());
        return 5;
    } catch (const DomainError& e) {
        std::cerr << json_error("domain", e.what());
        return 5;
    } catch (const std::exception& e) {
        std::cerr << json_error("internal", e.what());
        return 1;
    }
}

void write_matrix_file(const std::string& path, const OperatorMatrix& m,
                       const std::string& frame_label) {
    std::string content;
    content += "k=" + std::to_string(m.k) + "\n";
    content += "basis=";
    content += (m.basis == BasisFrame::Epsilon) ? "epsilon" : "e";
    content += "\n";
    content += "frame=" + frame_label + "\n";
    for (int row = 0; row < m.k; ++row) {
        for (int col = 0; col < m.k; ++col) {
            content += std::to_string(row);
            content += ' ';
            content += std::to_string(col);
            content += ' ';
            format_double(content, m.entries(row, col).real());
            content += ' ';
            format_double(content, m.entries(row, col).imag());
            content += '\n';
        }
    }
    write_text_file(path, content);
}

OperatorMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file: " + path);
    std::string line;
    int k = -1;
    BasisFrame basis = BasisFrame::E;
    for (int header = 0; header < 3; ++header) {
        if (!std::getline(in, line)) throw InputError(path + ": truncated header");
        if (line.rfind("k=", 0) == 0) {
            k = std::atoi(line.c_str() + 2);
        } else if (line.rfind("basis=", 0) == 0) {
            const std::string b = line.substr(6);
            if (b == "epsilon") {
                basis = BasisFrame::Epsilon;
            } else if (b == "e") {
                basis = BasisFrame::E;
            } else {
                throw InputError(path + ": unknown basis '" + b + "'");
            }
        } else if (line.rfind("frame=", 0) != 0) {
            throw InputError(path + ": unexpected header line '" + line + "'");
        }
    }
    if (k < 1) throw InputError(path + ": missing or invalid k header");
    OperatorMatrix m = OperatorMatrix::zero(basis, k);
    int row, col;
    double re, im;
    long count = 0;
    while (in >> row >> col >> re >> im) {
        if (row < 0 || row >= k || col < 0 || col >= k) {
            throw InputError(path + ": entry index out of range");
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw InputError(path + ": non-finite entry");
        }
        m.entries(row, col) = Complex(re, im);
        ++count;
    }
    if (count != static_cast<long>(k) * k) {
        throw InputError(path + ": expected " + std::to_string(static_cast<long>(k) * k) +
                         " entries, found " + std::to_string(count));
    }
    return m;
}

}  // namespace torusq
