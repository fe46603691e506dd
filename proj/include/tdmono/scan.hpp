#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdmono/quartet.hpp"

namespace tdmono {

/// Mergeable per-block aggregate. Merging in a fixed block order keeps the
/// floating-point sums bitwise reproducible regardless of worker count.
struct ScanPartial {
    std::uint64_t n_total = 0;
    std::uint64_t n_flagged = 0;
    double g_sum = 0.0;
    double g_sum_sq = 0.0;
    double g_max = 0.0;  // meaningful only when n_flagged > 0

    void add(const QuartetMetrics& m);
    void merge(const ScanPartial& o);
};

struct QuartetRecord {
    std::uint64_t index;      // global quartet index within the run
    std::uint64_t stream_id;  // RNG stream that produced it
    QuartetMetrics metrics;
};

enum class RecordMode { None, FlaggedOnly, All };

/// Work is split into fixed-size blocks; block b consumes the RNG stream
/// (seed, stream_base + b) from its start. The sampled quartets therefore
/// depend only on (seed, stream_base, block_size), never on how many
/// workers execute the blocks.
struct ScanOptions {
    std::uint64_t block_size = 8192;
    int n_workers = 0;  // 0 = all hardware threads; 1 = serial
    RecordMode record_mode = RecordMode::None;
    ToleranceConfig tol{};
};

struct ScanResult {
    ScanPartial totals;
    std::vector<QuartetRecord> records;  // in index order; empty unless requested
};

std::uint64_t scan_block_count(std::uint64_t n, std::uint64_t block_size);

/// Reference implementation: plain loop over blocks on the calling thread.
ScanResult scan_case_serial(const CaseStudy& cs, std::uint64_t n, std::uint64_t seed,
                            std::uint64_t stream_base, const ScanOptions& opt);

/// OpenMP kernel over blocks; falls back to the serial path when built
/// without OpenMP or when n_workers == 1. Result is bitwise identical to
/// scan_case_serial for the same (seed, stream_base, block_size).
ScanResult scan_case(const CaseStudy& cs, std::uint64_t n, std::uint64_t seed,
                     std::uint64_t stream_base, const ScanOptions& opt);

struct FoundExample {
    std::uint64_t index;
    std::uint64_t stream_id;
    Quartet quartet;
    QuartetMetrics metrics;
};

/// First flagged quartet (in index order) whose four distances match the
/// target within l_inf_tol, or nullopt after max_draws quartets.
std::optional<FoundExample> find_example(const CaseStudy& cs, const std::array<double, 4>& target,
                                         double l_inf_tol, std::uint64_t max_draws,
                                         std::uint64_t seed, std::uint64_t stream_base,
                                         const ScanOptions& opt);

}  // namespace tdmono
