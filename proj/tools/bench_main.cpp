// Benchmark comparing the OpenMP-parallel kernels against their serial
// reference implementations, asserting result equality along the way:
//   - verify_range across k (parallel workers vs a single worker)
//   - the O(n^2) pairwise-distance scan (threaded vs serial)
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "fibroot/analysis.hpp"
#include "fibroot/report_io.hpp"
#include "fibroot/verifier.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

bool stats_equal(const fibroot::SeparationStats& a,
                 const fibroot::SeparationStats& b) {
    if (a.argmin_pair != b.argmin_pair) return false;
    if (a.min_separation.has_value() != b.min_separation.has_value())
        return false;
    if (!a.min_separation) return true;
    return a.min_separation->lo().equals(b.min_separation->lo()) &&
           a.min_separation->hi().equals(b.min_separation->hi());
}

}  // namespace

int main(int argc, char** argv) {
    int k_max = 60;
    int scan_k = 150;
    int scan_reps = 20;
    CLI::App app{"parallel-vs-serial benchmark for the verification kernels"};
    app.add_option("--k-max", k_max, "verify_range upper k (lower is 2)");
    app.add_option("--scan-k", scan_k, "family index for the pair-scan bench");
    app.add_option("--scan-reps", scan_reps, "pair-scan repetitions");
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    fibroot::PrecisionConfig prec;

    std::printf("kernel                        serial      parallel(%d)  "
                "speedup   results\n",
                threads);

    auto t0 = std::chrono::steady_clock::now();
    fibroot::Report serial_report =
        fibroot::verify_range(2, k_max, prec, 1);
    const double range_serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    fibroot::Report parallel_report =
        fibroot::verify_range(2, k_max, prec, threads);
    const double range_parallel = seconds_since(t0);
    // The CSV form strips runtime, so equality means identical verdicts,
    // margins, witnesses, and precision trails.
    serial_report.config.parallel = parallel_report.config.parallel = 0;
    const bool range_match =
        fibroot::serialize_report(serial_report, fibroot::OutputFormat::csv) ==
        fibroot::serialize_report(parallel_report,
                                  fibroot::OutputFormat::csv);
    std::printf("verify_range(2..%-3d)      %8.2fs    %8.2fs    %6.2fx   %s\n",
                k_max, range_serial, range_parallel,
                range_serial / range_parallel,
                range_match ? "identical" : "MISMATCH");

    fibroot::RootSet rs =
        fibroot::solve_all(fibroot::FamilyIndex(scan_k), prec);
    if (!rs.certified) {
        std::fprintf(stderr, "pair-scan bench: solve_all(%d) uncertified\n",
                     scan_k);
        return 1;
    }
    fibroot::SeparationStats serial_stats = fibroot::min_separation_serial(
        rs, fibroot::SeparationScope::all_pairs);
    t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < scan_reps; ++i)
        serial_stats = fibroot::min_separation_serial(
            rs, fibroot::SeparationScope::all_pairs);
    const double scan_serial = seconds_since(t0);
    fibroot::SeparationStats parallel_stats =
        fibroot::min_separation(rs, fibroot::SeparationScope::all_pairs);
    t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < scan_reps; ++i)
        parallel_stats =
            fibroot::min_separation(rs, fibroot::SeparationScope::all_pairs);
    const double scan_parallel = seconds_since(t0);
    const bool scan_match = stats_equal(serial_stats, parallel_stats);
    std::printf("pair scan k=%-3d x%-4d     %8.2fs    %8.2fs    %6.2fx   %s\n",
                scan_k, scan_reps, scan_serial, scan_parallel,
                scan_serial / scan_parallel,
                scan_match ? "identical" : "MISMATCH");

    return range_match && scan_match ? 0 : 1;
}
