// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "torusq/operator_matrix.hpp"

namespace torusq {

// Parsed command-line run.  Exactly one of symbol_name / symbol_file must be
// set; k_list is used by scan, k by the other commands.
struct RunConfig {
    enum class Command { Quantize, Compare, Scan, Spectrum };
    enum class Format { Json, Csv };

    Command command = Command::Compare;
    std::string symbol_name;
    std::string symbol_file;
    int k = 8;
    std::vector<int> k_list;
    double c = 0.0;
    double d = 0.0;
    int J = -1;
    int m_max = -1;  // re-truncate the symbol table when >= 0
    int n_max = -1;
    int np = -1;
    int nq = -1;
    std::string output;  // file path (or path prefix for quantize); "" = default
    Format format = Format::Json;
    bool serial = false;  // force the serial reference kernels
};

// Executes a run, writing its output files.  Returns the process exit code
// (0 on success) and emits a machine-readable JSON error record to stderr on
// failure.  Honors the TORUSQ_THREADS environment variable.
int run(const RunConfig& config);

// Matrix file format used by the quantize command: header lines "k=", "basis="
// and "frame=", then k^2 lines "row col re im" in row-major order with 17
// significant digits (lossless double round trip).
void write_matrix_file(const std::string& path, const OperatorMatrix& m,
                       const std::string& frame_label);
OperatorMatrix read_matrix_file(const std::string& path);

}  // namespace torusq
