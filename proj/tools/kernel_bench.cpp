/* kernel_bench.cpp -- times each kernel's serial and OpenMP flavors side by
 * side on generated inputs and verifies the outputs agree bit for bit.
 */

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include <CLI11.hpp>

#include "synckit/exec.hpp"
#include "synckit/gen.hpp"
#include "synckit/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(int reps, F&& run) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        run();
        auto t1 = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best)
            best = ms;
    }
    return best;
}

void report(const char* kernel, const std::string& size, double serial_ms, double parallel_ms,
            bool equal) {
    std::printf("%-28s %-18s %10.2f %12.2f %8.2fx  %s\n", kernel, size.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, equal ? "equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timing"};
    std::uint32_t pair_n = 600, pair_k = 4;
    std::uint32_t matrix_n = 1200;
    std::uint32_t monoid_n = 9, monoid_k = 3;
    std::uint64_t seed = 1;
    int reps = 5;
    app.add_option("--pair-n", pair_n, "states for the pair-graph kernels");
    app.add_option("--pair-k", pair_k, "letters for the pair-graph kernels");
    app.add_option("--matrix-n", matrix_n, "dimension of the closure matrix");
    app.add_option("--monoid-n", monoid_n, "states for the monoid closure (monotone input)");
    app.add_option("--monoid-k", monoid_k, "letters for the monoid closure");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--reps", reps, "repetitions; best time is reported");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads %d\n\n", synckit::max_threads());
    std::printf("%-28s %-18s %10s %12s %9s\n", "kernel", "size", "serial_ms", "parallel_ms",
                "speedup");

    {
        synckit::Dfa dfa = synckit::random_dfa(pair_n, pair_k, seed);
        std::vector<std::uint32_t> a, b;
        double s = best_ms(reps, [&] { a = synckit::kernels::pair_targets_serial(dfa); });
        double p = best_ms(reps, [&] { b = synckit::kernels::pair_targets_parallel(dfa); });
        report("pair_targets", std::to_string(pair_n) + "x" + std::to_string(pair_k), s, p,
               a == b);

        double s2 = best_ms(reps,
                            [&] { a = synckit::kernels::pair_targets_noncollapsing_serial(dfa); });
        double p2 = best_ms(
            reps, [&] { b = synckit::kernels::pair_targets_noncollapsing_parallel(dfa); });
        report("pair_targets_noncollapsing",
               std::to_string(pair_n) + "x" + std::to_string(pair_k), s2, p2, a == b);
    }

    {
        const std::uint32_t words = (matrix_n + 63) / 64;
        std::vector<std::uint64_t> base(std::size_t(matrix_n) * words, 0);
        synckit::SplitMix64 rng(seed);
        // Sparse random relation, ~2 successors per row, so the closure has work to do.
        for (std::uint32_t i = 0; i < matrix_n; ++i)
            for (int e = 0; e < 2; ++e) {
                std::uint32_t j = std::uint32_t(rng.next() % matrix_n);
                base[std::size_t(i) * words + j / 64] |= std::uint64_t(1) << (j % 64);
            }
        std::vector<std::uint64_t> a, b;
        double s = best_ms(reps, [&] {
            a = base;
            synckit::kernels::transitive_closure_serial(a.data(), matrix_n, words);
        });
        double p = best_ms(reps, [&] {
            b = base;
            synckit::kernels::transitive_closure_parallel(b.data(), matrix_n, words);
        });
        report("transitive_closure", std::to_string(matrix_n) + "x" + std::to_string(matrix_n),
               s, p, a == b);
    }

    {
        synckit::Dfa dfa = synckit::random_monotone_dfa(monoid_n, monoid_k, seed);
        synckit::kernels::Closure a, b;
        const std::uint64_t cap = 5'000'000;
        double s = best_ms(reps, [&] { a = synckit::kernels::monoid_closure_serial(dfa, cap); });
        double p =
            best_ms(reps, [&] { b = synckit::kernels::monoid_closure_parallel(dfa, cap); });
        bool equal = a.elements == b.elements && a.parent == b.parent && a.via == b.via;
        report("monoid_closure",
               "n=" + std::to_string(monoid_n) + " k=" + std::to_string(monoid_k) +
                   " |M|=" + std::to_string(a.elements.size()),
               s, p, equal);
    }

    return 0;
}
