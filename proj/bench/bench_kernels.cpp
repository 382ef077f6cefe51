// SPDX-License-Identifier: Apache-2.0
//
// Timing comparison of the serial reference kernels against the
// OpenMP-parallel ones on the hot path (quadrature assembly).  The two
// kernels are bit-identical in output; this target only measures speed.
//
// Usage: bench_kernels [k ...]    (default levels: 16 32 48 64)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <vector>

#include "torusq/assembly.hpp"
#include "torusq/correspondence.hpp"

using namespace torusq;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_level(int k) {
    const FourierSymbol harper = builtin_symbol("harper");
    const FloquetTorus t = FloquetTorus::make(k, 0.4, 1.1, -1, -1, -1, 1, 1);

    Eigen::MatrixXcd serial_out, parallel_out;
    const double serial_ms = time_ms([&] {
        serial_out = compress_multiplier(t, harper, t.np, t.nq, ExecPolicy::Serial);
    });
    const double parallel_ms = time_ms([&] {
        parallel_out = compress_multiplier(t, harper, t.np, t.nq, ExecPolicy::Parallel);
    });
    const bool identical =
        std::memcmp(serial_out.data(), parallel_out.data(),
                    sizeof(Complex) * serial_out.size()) == 0;

    std::printf("k=%-3d np=%-4d nq=%-4d  serial %8.1f ms  parallel %8.1f ms  speedup %4.2fx  %s\n",
                k, t.np, t.nq, serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "bit-identical" : "OUTPUT MISMATCH");
    if (!identical) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> levels;
    for (int i = 1; i < argc; ++i) levels.push_back(std::atoi(argv[i]));
    if (levels.empty()) levels = {16, 32, 48, 64};

    std::printf("threads: %d\n", omp_get_max_threads());
    for (int k : levels) bench_level(k);

    // end-to-end: one full residual evaluation (assembly dominates)
    const FourierSymbol harper = builtin_symbol("harper");
    const FloquetTorus t = FloquetTorus::make(32, 0.0, 0.0, -1, -1, -1, 1, 1);
    const double serial_ms =
        time_ms([&] { residual_complex_weyl(t, harper, ExecPolicy::Serial); });
    const double parallel_ms =
        time_ms([&] { residual_complex_weyl(t, harper, ExecPolicy::Parallel); });
    std::printf("residual k=32 (with refinement): serial %.1f ms, parallel %.1f ms, %.2fx\n",
                serial_ms, parallel_ms, serial_ms / parallel_ms);
    return 0;
}
