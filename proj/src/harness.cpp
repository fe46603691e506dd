#include "tdmono/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tdmono/rng.hpp"
#include "tdmono/trace_distance.hpp"

namespace tdmono {

namespace {

/// Run fn(block) for every block index and return the outputs in block
/// order. The fixed merge order is what keeps downstream reductions
/// independent of the worker count.
template <class Out, class Fn>
std::vector<Out> map_blocks(std::uint64_t n_blocks, int n_workers, Fn&& fn) {
    std::vector<Out> out(n_blocks);
#ifdef _OPENMP
    const int workers = n_workers > 0 ? n_workers : omp_get_max_threads();
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (long long b = 0; b < static_cast<long long>(n_blocks); ++b)
            out[b] = fn(static_cast<std::uint64_t>(b));
        return out;
    }
#else
    (void)n_workers;
#endif
    for (std::uint64_t b = 0; b < n_blocks; ++b) out[b] = fn(b);
    return out;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (case_study) case_study->validate();
    if (n_quartets < 1) throw std::invalid_argument("config: n_quartets must be at least 1");
    if (n_repetitions < 1) throw std::invalid_argument("config: n_repetitions must be at least 1");
    if (block_size < 1) throw std::invalid_argument("config: block_size must be at least 1");
    if (histogram_bins < 1) throw std::invalid_argument("config: histogram_bins must be at least 1");
    if (n_streams < 0) throw std::invalid_argument("config: n_streams must be nonnegative");
    int prev = 1;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("config: sweep dimensions must be at least 2");
        if (d <= prev) throw std::invalid_argument("config: sweep dimensions must be ascending");
        prev = d;
    }
    tol.validate();
}

ScanOptions ExperimentConfig::scan_options(RecordMode mode) const {
    ScanOptions opt;
    opt.block_size = block_size;
    opt.n_workers = n_streams;
    opt.record_mode = mode;
    opt.tol = tol;
    return opt;
}

std::uint64_t ExperimentConfig::sweep_quartets(int d) const {
    return d <= 5 ? n_quartets : std::max<std::uint64_t>(1, n_quartets / 5);
}

CaseSummary CaseSummary::from_partial(const ScanPartial& p) {
    CaseSummary s;
    s.n_total = p.n_total;
    s.n_flagged = p.n_flagged;
    s.percentage = p.n_total ? 100.0 * static_cast<double>(p.n_flagged) / p.n_total : 0.0;
    if (p.n_flagged > 0) {
        const double n = static_cast<double>(p.n_flagged);
        const double mean = p.g_sum / n;
        s.g_mean = mean;
        s.g_std = std::sqrt(std::max(0.0, p.g_sum_sq / n - mean * mean));
        s.g_max = p.g_max;
    }
    return s;
}

CaseSummary run_case(const CaseStudy& cs, const ExperimentConfig& cfg) {
    cfg.validate();
    const ScanResult res = scan_case(cs, cfg.n_quartets, cfg.seed, 0, cfg.scan_options());
    return CaseSummary::from_partial(res.totals);
}

std::vector<SweepPoint> run_dimension_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.dims.empty()) throw std::invalid_argument("sweep: no dimensions configured");

    std::vector<SweepPoint> points;
    std::uint64_t stream_base = 0;
    for (int d : cfg.dims) {
        const CaseStudy cs = CaseStudy::spectral(d);
        const std::uint64_t n = cfg.sweep_quartets(d);
        SweepPoint pt;
        pt.d = d;
        pt.n_per_rep = n;
        pt.reps = cfg.n_repetitions;

        double fsum = 0.0;
        pt.fraction_min = 2.0;
        pt.fraction_max = -1.0;
        double gsum = 0.0;
        std::uint32_t g_reps = 0;
        for (std::uint32_t rep = 0; rep < cfg.n_repetitions; ++rep) {
            const ScanResult res = scan_case(cs, n, cfg.seed, stream_base, cfg.scan_options());
            stream_base += scan_block_count(n, cfg.block_size);
            const CaseSummary s = CaseSummary::from_partial(res.totals);
            const double frac = static_cast<double>(s.n_flagged) / static_cast<double>(s.n_total);
            fsum += frac;
            pt.fraction_min = std::min(pt.fraction_min, frac);
            pt.fraction_max = std::max(pt.fraction_max, frac);
            pt.g_mean_per_rep.push_back(s.g_mean);
            if (s.g_mean) {
                gsum += *s.g_mean;
                ++g_reps;
                pt.g_mean_min = pt.g_mean_min ? std::min(*pt.g_mean_min, *s.g_mean) : *s.g_mean;
                pt.g_mean_max = pt.g_mean_max ? std::max(*pt.g_mean_max, *s.g_mean) : *s.g_mean;
            }
            pt.rep_summaries.push_back(s);
        }
        pt.fraction_mean = fsum / cfg.n_repetitions;
        if (g_reps > 0) pt.g_mean_mean = gsum / g_reps;
        points.push_back(std::move(pt));
    }
    return points;
}

namespace {

struct HistPartial {
    std::vector<std::uint64_t> counts;
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;
};

}  // namespace

HistogramResult run_td_histogram(SlotKind first, SlotKind second, const ExperimentConfig& cfg) {
    cfg.validate();
    const bool allowed = (first == SlotKind::MixedBall && second == SlotKind::MixedBall) ||
                         (first == SlotKind::MixedBall && second == SlotKind::Pure) ||
                         (first == SlotKind::Pure && second == SlotKind::Pure);
    if (!allowed)
        throw std::invalid_argument(
            "histogram: pair class must be (mb,mb), (mb,p) or (p,p)");

    const int bins = cfg.histogram_bins;
    const std::uint64_t n = cfg.n_quartets;
    const std::uint64_t n_blocks = scan_block_count(n, cfg.block_size);
    const double lo = 0.0, hi = 2.0;

    auto worker = [&](std::uint64_t b) {
        HistPartial p;
        p.counts.assign(bins, 0);
        const std::uint64_t begin = b * cfg.block_size;
        const std::uint64_t end = std::min(n, begin + cfg.block_size);
        RngStream rng(cfg.seed, b);
        for (std::uint64_t i = begin; i < end; ++i) {
            const DensityMatrix x = sample_state(first, 2, rng, cfg.tol);
            const DensityMatrix y = sample_state(second, 2, rng, cfg.tol);
            const double td = trace_distance(x, y, cfg.tol);
            int bin = static_cast<int>((td - lo) / (hi - lo) * bins);
            bin = std::clamp(bin, 0, bins - 1);
            ++p.counts[bin];
            p.sum += td;
            p.sum_sq += td * td;
            ++p.n;
        }
        return p;
    };
    const std::vector<HistPartial> parts =
        map_blocks<HistPartial>(n_blocks, cfg.n_streams, worker);

    HistogramResult r;
    r.hist.lo = lo;
    r.hist.hi = hi;
    r.hist.counts.assign(bins, 0);
    double sum = 0.0, sum_sq = 0.0;
    for (const HistPartial& p : parts) {
        for (int k = 0; k < bins; ++k) r.hist.counts[k] += p.counts[k];
        sum += p.sum;
        sum_sq += p.sum_sq;
        r.hist.total += p.n;
    }
    r.n_pairs = r.hist.total;
    r.mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, sum_sq / static_cast<double>(n) - r.mean * r.mean);
    r.std_error = std::sqrt(var / static_cast<double>(n));
    return r;
}

StrengthSamples emit_strength_samples(const CaseStudy& cs, const ExperimentConfig& cfg) {
    cfg.validate();
    ScanResult res =
        scan_case(cs, cfg.n_quartets, cfg.seed, 0, cfg.scan_options(RecordMode::FlaggedOnly));
    StrengthSamples out;
    out.summary = CaseSummary::from_partial(res.totals);
    out.flagged = std::move(res.records);
    if (out.summary.n_flagged > 0) {
        StrengthBand band;
        band.g_mean = *out.summary.g_mean;
        band.g_std = *out.summary.g_std;
        band.band_lo = band.g_mean - band.g_std;
        band.band_hi = band.g_mean + band.g_std;
        std::uint64_t inside = 0;
        for (const QuartetRecord& rec : out.flagged) {
            const double g = *rec.metrics.g;
            if (g >= band.band_lo && g <= band.band_hi) ++inside;
        }
        band.fraction_in_band = static_cast<double>(inside) / out.flagged.size();
        out.band = band;
    }
    return out;
}

void ValidationConfig::validate() const {
    if (n_collinear < 1 || n_pure_base < 1 || n_pure_high < 1)
        throw std::invalid_argument("validation: pair counts must be at least 1");
    if (d_max < 2) throw std::invalid_argument("validation: d_max must be at least 2");
    if (block_size < 1) throw std::invalid_argument("validation: block_size must be at least 1");
    if (!(contract > 0.0)) throw std::invalid_argument("validation: contract must be positive");
    tol.validate();
}

PrecisionReport run_precision_validation(const ValidationConfig& cfg) {
    cfg.validate();
    PrecisionReport report;
    report.contract = cfg.contract;

    std::uint64_t stream_base = 0;
    auto run_class = [&](AnalyticPairClass cls, int d, std::uint64_t n_pairs, const char* name) {
        const std::uint64_t n_blocks = scan_block_count(n_pairs, cfg.block_size);
        auto worker = [&, cls, d, n_pairs](std::uint64_t b) {
            const std::uint64_t begin = b * cfg.block_size;
            const std::uint64_t end = std::min(n_pairs, begin + cfg.block_size);
            RngStream rng(cfg.seed, stream_base + b);
            return crosscheck_precision(cls, d, end - begin, rng, cfg.tol);
        };
        const std::vector<double> worsts = map_blocks<double>(n_blocks, cfg.n_streams, worker);
        stream_base += n_blocks;
        double worst = 0.0;
        for (double w : worsts) worst = std::max(worst, w);
        report.classes.push_back(PrecisionClassReport{name, d, n_pairs, worst});
        report.worst_abs_error = std::max(report.worst_abs_error, worst);
    };

    run_class(AnalyticPairClass::CollinearQubit, 2, cfg.n_collinear, "collinear");
    run_class(AnalyticPairClass::PureState, 2, cfg.n_pure_base, "pure");
    for (int d = 3; d <= cfg.d_max; ++d)
        run_class(AnalyticPairClass::PureState, d, cfg.n_pure_high, "pure");

    report.pass = report.worst_abs_error <= cfg.contract;
    return report;
}

}  // namespace tdmono
