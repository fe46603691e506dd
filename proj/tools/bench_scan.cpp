// Throughput comparison between the serial reference scan and the OpenMP
// kernel. Also checks that both paths aggregate to identical summaries.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tdmono/harness.hpp"

using namespace tdmono;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

bool same_totals(const ScanPartial& a, const ScanPartial& b) {
    return a.n_total == b.n_total && a.n_flagged == b.n_flagged && a.g_sum == b.g_sum &&
           a.g_sum_sq == b.g_sum_sq && a.g_max == b.g_max;
}

void bench_case(const CaseStudy& cs, std::uint64_t n, std::uint64_t seed) {
    ScanOptions opt;
    opt.n_workers = 1;
    const double t0 = now();
    const ScanResult serial = scan_case_serial(cs, n, seed, 0, opt);
    const double t_serial = now() - t0;

    opt.n_workers = 0;  // all cores
    const double t1 = now();
    const ScanResult parallel = scan_case(cs, n, seed, 0, opt);
    const double t_parallel = now() - t1;

    const bool ok = same_totals(serial.totals, parallel.totals);
    std::printf("%-14s d=%d n=%-8llu serial %8.0f q/s   parallel %8.0f q/s   speedup %.2fx   %s\n",
                cs.label().c_str(), cs.dim, static_cast<unsigned long long>(n), n / t_serial,
                n / t_parallel, t_serial / t_parallel, ok ? "identical" : "MISMATCH");
    if (!ok) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t n_qubit = 200000;
    std::uint64_t n_qudit = 20000;
    std::uint64_t seed = 12345;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--n-qubit") == 0 && i + 1 < argc)
            n_qubit = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--n-qudit") == 0 && i + 1 < argc)
            n_qudit = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::printf("usage: %s [--n-qubit N] [--n-qudit N] [--seed S]\n", argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP with %d hardware threads\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path degrades to serial\n");
#endif

    bench_case(CaseStudy::table1_row(1), n_qubit, seed);
    bench_case(CaseStudy::table1_row(7), n_qubit, seed);
    bench_case(CaseStudy::spectral(3), n_qudit, seed);
    bench_case(CaseStudy::spectral(4), n_qudit, seed);
    return 0;
}
