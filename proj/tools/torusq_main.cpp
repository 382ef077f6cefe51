// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include "torusq/cli.hpp"

namespace {

void add_symbol_options(CLI::App* cmd, torusq::RunConfig& cfg) {
    auto* name = cmd->add_option("--symbol", cfg.symbol_name,
                                 "built-in symbol name (one, cos_p, cos_q, sin_q, harper)");
    auto* file = cmd->add_option("--symbol-file", cfg.symbol_file,
                                 "coefficient file: 'frame=...' header, then 'm n re im' lines");
    name->excludes(file);
}

void add_torus_options(CLI::App* cmd, torusq::RunConfig& cfg) {
    cmd->add_option("--c", cfg.c, "Floquet angle c, u = e^{ic} (reduced mod 2pi)");
    cmd->add_option("--d", cfg.d, "Floquet angle d, v = e^{id} (reduced mod 2pi)");
    cmd->add_option("--J", cfg.J, "theta truncation half-width override");
    cmd->add_option("--m-max", cfg.m_max, "truncate the symbol table at |m| <= m-max");
    cmd->add_option("--n-max", cfg.n_max, "truncate the symbol table at |n| <= n-max");
    cmd->add_option("--Np", cfg.np, "quadrature nodes in p override");
    cmd->add_option("--Nq", cfg.nq, "quadrature nodes in q override");
    cmd->add_flag("--serial", cfg.serial, "use the serial reference kernels");
}

void add_output_options(CLI::App* cmd, torusq::RunConfig& cfg, bool with_format = true) {
    cmd->add_option("--out", cfg.output, "output path (command-specific default)");
    if (with_format) {
        cmd->add_option("--format", [&cfg](const CLI::results_t& res) {
            if (res[0] == "json") {
                cfg.format = torusq::RunConfig::Format::Json;
            } else if (res[0] == "csv") {
                cfg.format = torusq::RunConfig::Format::Csv;
            } else {
                return false;
            }
            return true;
        },
        "output format: json (default) or csv");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "torusq: Berezin-Toeplitz and complex Weyl quantizations of the torus as k x k "
        "matrices, with residual and spectrum comparisons"};
    app.require_subcommand(1);

    torusq::RunConfig cfg;

    auto* quantize = app.add_subcommand(
        "quantize", "write the Toeplitz and heat-flow Weyl matrices of a symbol");
    quantize->add_option("--k", cfg.k, "level")->required();
    add_symbol_options(quantize, cfg);
    add_torus_options(quantize, cfg);
    add_output_options(quantize, cfg, false);
    quantize->callback([&] { cfg.command = torusq::RunConfig::Command::Quantize; });

    auto* compare =
        app.add_subcommand("compare", "residuals between the two quantizations at one level");
    compare->add_option("--k", cfg.k, "level")->required();
    add_symbol_options(compare, cfg);
    add_torus_options(compare, cfg);
    add_output_options(compare, cfg);
    compare->callback([&] { cfg.command = torusq::RunConfig::Command::Compare; });

    auto* scan = app.add_subcommand("scan", "residual decay scan over several levels");
    scan->add_option("--k-list", cfg.k_list, "strictly increasing levels, e.g. 8,16,24,32")
        ->required()
        ->delimiter(',');
    add_symbol_options(scan, cfg);
    add_torus_options(scan, cfg);
    add_output_options(scan, cfg);
    scan->callback([&] { cfg.command = torusq::RunConfig::Command::Scan; });

    auto* spectrum =
        app.add_subcommand("spectrum", "eigenvalues of both quantizations and their distance");
    spectrum->add_option("--k", cfg.k, "level")->required();
    add_symbol_options(spectrum, cfg);
    add_torus_options(spectrum, cfg);
    add_output_options(spectrum, cfg);
    spectrum->callback([&] { cfg.command = torusq::RunConfig::Command::Spectrum; });

    CLI11_PARSE(app, argc, argv);
    return torusq::run(cfg);
}
