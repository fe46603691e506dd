#include "tdmono/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tdmono/rng.hpp"

namespace tdmono {

void ScanPartial::add(const QuartetMetrics& m) {
    ++n_total;
    if (m.nmutp) {
        const double g = *m.g;
        ++n_flagged;
        g_sum += g;
        g_sum_sq += g * g;
        g_max = std::max(g_max, g);
    }
}

void ScanPartial::merge(const ScanPartial& o) {
    n_total += o.n_total;
    n_flagged += o.n_flagged;
    g_sum += o.g_sum;
    g_sum_sq += o.g_sum_sq;
    g_max = std::max(g_max, o.g_max);
}

std::uint64_t scan_block_count(std::uint64_t n, std::uint64_t block_size) {
    if (block_size == 0) throw std::invalid_argument("scan: block_size must be positive");
    return (n + block_size - 1) / block_size;
}

namespace {

struct BlockOutput {
    ScanPartial partial;
    std::vector<QuartetRecord> records;
};

BlockOutput scan_one_block(const CaseStudy& cs, std::uint64_t block, std::uint64_t n,
                           std::uint64_t seed, std::uint64_t stream_base,
                           const ScanOptions& opt) {
    const std::uint64_t begin = block * opt.block_size;
    const std::uint64_t end = std::min(n, begin + opt.block_size);
    const std::uint64_t stream_id = stream_base + block;
    RngStream rng(seed, stream_id);

    BlockOutput out;
    for (std::uint64_t i = begin; i < end; ++i) {
        const Quartet q = generate_quartet(cs, rng, opt.tol);
        const QuartetMetrics m = evaluate_quartet(q, opt.tol);
        out.partial.add(m);
        if (opt.record_mode == RecordMode::All ||
            (opt.record_mode == RecordMode::FlaggedOnly && m.nmutp)) {
            out.records.push_back(QuartetRecord{i, stream_id, m});
        }
    }
    return out;
}

ScanResult merge_blocks(std::vector<BlockOutput>&& blocks) {
    ScanResult result;
    for (BlockOutput& b : blocks) {
        result.totals.merge(b.partial);
        result.records.insert(result.records.end(), b.records.begin(), b.records.end());
    }
    return result;
}

}  // namespace

ScanResult scan_case_serial(const CaseStudy& cs, std::uint64_t n, std::uint64_t seed,
                            std::uint64_t stream_base, const ScanOptions& opt) {
    if (n < 1) throw std::invalid_argument("scan: quartet count must be at least 1");
    cs.validate();
    const std::uint64_t n_blocks = scan_block_count(n, opt.block_size);
    std::vector<BlockOutput> blocks(n_blocks);
    for (std::uint64_t b = 0; b < n_blocks; ++b)
        blocks[b] = scan_one_block(cs, b, n, seed, stream_base, opt);
    return merge_blocks(std::move(blocks));
}

ScanResult scan_case(const CaseStudy& cs, std::uint64_t n, std::uint64_t seed,
                     std::uint64_t stream_base, const ScanOptions& opt) {
#ifdef _OPENMP
    if (opt.n_workers == 1) return scan_case_serial(cs, n, seed, stream_base, opt);
    if (n < 1) throw std::invalid_argument("scan: quartet count must be at least 1");
    cs.validate();
    const std::uint64_t n_blocks = scan_block_count(n, opt.block_size);
    std::vector<BlockOutput> blocks(n_blocks);
    const int workers = opt.n_workers > 0 ? opt.n_workers : omp_get_max_threads();
    // Blocks are independent; the merge below runs in block order, so the
    // result does not depend on the schedule.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long b = 0; b < static_cast<long long>(n_blocks); ++b)
        blocks[b] = scan_one_block(cs, b, n, seed, stream_base, opt);
    return merge_blocks(std::move(blocks));
#else
    return scan_case_serial(cs, n, seed, stream_base, opt);
#endif
}

std::optional<FoundExample> find_example(const CaseStudy& cs, const std::array<double, 4>& target,
                                         double l_inf_tol, std::uint64_t max_draws,
                                         std::uint64_t seed, std::uint64_t stream_base,
                                         const ScanOptions& opt) {
    for (double t : target)
        if (!(t >= 0.0 && t <= 2.0))
            throw std::invalid_argument("find_example: targets must lie in [0, 2]");
    if (!(l_inf_tol >= 0.0)) throw std::invalid_argument("find_example: tolerance must be >= 0");
    if (max_draws < 1) throw std::invalid_argument("find_example: max_draws must be at least 1");
    cs.validate();

    const auto matches = [&](const QuartetMetrics& m) {
        return m.nmutp && std::abs(m.d1 - target[0]) <= l_inf_tol &&
               std::abs(m.d2 - target[1]) <= l_inf_tol && std::abs(m.dt1 - target[2]) <= l_inf_tol &&
               std::abs(m.dt2 - target[3]) <= l_inf_tol;
    };

    const std::uint64_t n_blocks = scan_block_count(max_draws, opt.block_size);
    std::optional<FoundExample> best;

#ifdef _OPENMP
    const int workers = opt.n_workers > 0 ? opt.n_workers : omp_get_max_threads();
    std::atomic<std::uint64_t> best_index{~std::uint64_t{0}};
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long b = 0; b < static_cast<long long>(n_blocks); ++b) {
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * opt.block_size;
        if (begin >= best_index.load(std::memory_order_relaxed)) continue;
        const std::uint64_t end = std::min(max_draws, begin + opt.block_size);
        const std::uint64_t stream_id = stream_base + static_cast<std::uint64_t>(b);
        RngStream rng(seed, stream_id);
        for (std::uint64_t i = begin; i < end; ++i) {
            Quartet q = generate_quartet(cs, rng, opt.tol);
            if (i >= best_index.load(std::memory_order_relaxed)) break;
            const QuartetMetrics m = evaluate_quartet(q, opt.tol);
            if (!matches(m)) continue;
#pragma omp critical(tdmono_find_example)
            {
                if (i < best_index.load(std::memory_order_relaxed)) {
                    best_index.store(i, std::memory_order_relaxed);
                    best = FoundExample{i, stream_id, std::move(q), m};
                }
            }
            break;  // later indices in this block cannot improve
        }
    }
#else
    for (std::uint64_t b = 0; b < n_blocks && !best; ++b) {
        const std::uint64_t begin = b * opt.block_size;
        const std::uint64_t end = std::min(max_draws, begin + opt.block_size);
        const std::uint64_t stream_id = stream_base + b;
        RngStream rng(seed, stream_id);
        for (std::uint64_t i = begin; i < end; ++i) {
            Quartet q = generate_quartet(cs, rng, opt.tol);
            const QuartetMetrics m = evaluate_quartet(q, opt.tol);
            if (matches(m)) {
                best = FoundExample{i, stream_id, std::move(q), m};
                break;
            }
        }
    }
#endif
    return best;
}

}  // namespace tdmono
