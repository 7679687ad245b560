// Benchmark: block-sieved OpenMP sweep against the serial per-n reference.
// Both routes compute the same exact integer sums; the reference factors each
// n independently, the sweep amortizes the work across a block.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "modcount/asymptotics.hpp"

using namespace modcount;

namespace {

double time_of(const std::function<u128()>& fn, u128& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    u64 limit = argc > 1 ? std::stoull(argv[1]) : 2'000'000;
    std::string weight_str = argc > 2 ? argv[2] : "2^omega";
    Weight w = weight_from_name(weight_str);

    std::printf("weight=%s limit=%llu threads(max)=%d\n", weight_str.c_str(),
                (unsigned long long)limit, omp_get_max_threads());

    u128 naive = 0, sweep1 = 0, sweepN = 0;
    double t_naive = time_of([&] { return naive_weight_sum(w, limit); }, naive);

    SweepOptions so;
    so.limit = limit;
    so.threads = 1;
    double t_sweep1 =
        time_of([&] { return partial_sum_sweep(w, so).scaled_total(1); }, sweep1);
    so.threads = 0;
    double t_sweepN =
        time_of([&] { return partial_sum_sweep(w, so).scaled_total(1); }, sweepN);

    std::printf("%-28s %12.3fs  sum=%s\n", "serial reference (factorize)", t_naive,
                to_string_u128(naive).c_str());
    std::printf("%-28s %12.3fs  sum=%s  speedup=%.1fx\n", "block sweep, 1 thread", t_sweep1,
                to_string_u128(sweep1).c_str(), t_naive / t_sweep1);
    std::printf("%-28s %12.3fs  sum=%s  speedup=%.1fx\n", "block sweep, all threads",
                t_sweepN, to_string_u128(sweepN).c_str(), t_naive / t_sweepN);

    if (naive != sweep1 || sweep1 != sweepN) {
        std::printf("MISMATCH between routes\n");
        return 1;
    }
    std::printf("all routes agree\n");
    return 0;
}
