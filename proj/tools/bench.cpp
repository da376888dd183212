// Self-timed comparison of the serial and OpenMP lanes of the two parallel
// kernels: the spectrum scan (independent lambda probes) and the pattern
// oracle (independent argmax patterns). Results are asserted equal before
// any timing is reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <maxplus/spectrum.hpp>
#include <maxplus/two_sided.hpp>

using namespace maxplus;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

IntervalSystem make_intervals(int m) {
    // Disjoint half-integer intervals: [0, 3/2], [3, 9/2], ...
    std::vector<std::pair<Rat, Rat>> iv;
    for (int i = 0; i < m; ++i)
        iv.emplace_back(make_rat(3 * i), make_rat(6 * i + 3, 2));
    return IntervalSystem(std::move(iv));
}

void bench_scan(int m) {
    const auto [A, B] = synth_matrices(make_intervals(m));

    ScanOptions serial;
    serial.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    const Spectrum s1 = compute_spectrum(A, B, serial);
    const double serial_ms = ms_since(t0);

    ScanOptions parallel;
    parallel.parallel = true;
    t0 = std::chrono::steady_clock::now();
    const Spectrum s2 = compute_spectrum(A, B, parallel);
    const double parallel_ms = ms_since(t0);

    if (s1.components != s2.components || s1.samples.size() != s2.samples.size()) {
        std::fprintf(stderr, "FATAL: scan lanes disagree\n");
        std::exit(1);
    }
    std::printf("spectrum scan   m=%-3d probes=%-6zu serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                m, s1.samples.size(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

void bench_oracle(int cols) {
    // A random all-integer pencil probed at a lambda below the feasible
    // bounds: infeasible, so both lanes enumerate every pattern.
    std::mt19937_64 rng(12345);
    TropMatrix A(2, cols), B(2, cols);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < cols; ++j) {
            A.set(i, j, ExtReal(make_rat(static_cast<long>(rng() % 21) - 10)));
            B.set(i, j, ExtReal(make_rat(static_cast<long>(rng() % 21) - 10)));
        }
    const SpectrumBounds bounds = lambda_bounds(A, B);
    const Rat lambda = bounds.lo.value() - 1;

    OracleOptions serial;
    serial.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    const TwoSidedOutcome r1 = pattern_oracle(A, B, lambda, serial);
    const double serial_ms = ms_since(t0);

    OracleOptions parallel;
    parallel.parallel = true;
    t0 = std::chrono::steady_clock::now();
    const TwoSidedOutcome r2 = pattern_oracle(A, B, lambda, parallel);
    const double parallel_ms = ms_since(t0);

    if (r1.solvable != r2.solvable || r1.iterations != r2.iterations ||
        r1.witness_x != r2.witness_x) {
        std::fprintf(stderr, "FATAL: oracle lanes disagree\n");
        std::exit(1);
    }
    std::printf("pattern oracle  m=%-3d patterns=%-8llu serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                cols, oracle_pattern_count(2, cols), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int intervals = 8;
    int oracle_cols = 10;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--intervals")
            intervals = std::atoi(argv[i + 1]);
        else if (flag == "--oracle-cols")
            oracle_cols = std::atoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "usage: %s [--intervals m] [--oracle-cols m]\n", argv[0]);
            return 64;
        }
    }
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both lanes run serially\n");
#endif
    bench_scan(intervals);
    bench_oracle(oracle_cols);
    return 0;
}
