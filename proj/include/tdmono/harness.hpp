#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdmono/scan.hpp"

namespace tdmono {

/// Knobs shared by the experiment families. n_streams is the number of
/// concurrent workers; it never influences which quartets are sampled, only
/// how fast the blocks are processed (see ScanOptions).
struct ExperimentConfig {
    std::optional<CaseStudy> case_study;  // default case for case-driven commands
    std::uint64_t n_quartets = 1000000;
    std::uint32_t n_repetitions = 1;
    std::uint64_t seed = 0;
    int n_streams = 0;  // 0 = all hardware threads
    std::uint64_t block_size = 8192;
    std::vector<int> dims;  // dimension sweep only; ascending, each >= 2
    int histogram_bins = 200;
    ToleranceConfig tol{};

    void validate() const;
    ScanOptions scan_options(RecordMode mode = RecordMode::None) const;
    /// Sweep sizing rule: n_quartets for d <= 5, n_quartets / 5 for d >= 6
    /// (the tensor-square eigensolves grow as d^6).
    std::uint64_t sweep_quartets(int d) const;
};

/// Aggregated statistics of one case run. The g fields are absent when no
/// quartet was flagged; g_std is the population standard deviation.
struct CaseSummary {
    std::uint64_t n_total = 0;
    std::uint64_t n_flagged = 0;
    double percentage = 0.0;
    std::optional<double> g_mean;
    std::optional<double> g_std;
    std::optional<double> g_max;

    static CaseSummary from_partial(const ScanPartial& p);
};

/// One repetition of a case at stream_base 0.
CaseSummary run_case(const CaseStudy& cs, const ExperimentConfig& cfg);

struct SweepPoint {
    int d = 0;
    std::uint64_t n_per_rep = 0;
    std::uint32_t reps = 0;
    double fraction_min = 0.0;
    double fraction_mean = 0.0;
    double fraction_max = 0.0;
    std::vector<std::optional<double>> g_mean_per_rep;
    std::optional<double> g_mean_min, g_mean_mean, g_mean_max;
    std::vector<CaseSummary> rep_summaries;
};

/// All-MixedSpectral quartets per dimension, n_repetitions independently
/// seeded repetitions each. Stream ids are allocated consecutively across
/// (dimension, repetition) blocks, so results are reproducible and
/// embarrassingly parallel.
std::vector<SweepPoint> run_dimension_sweep(const ExperimentConfig& cfg);

struct Histogram {
    double lo = 0.0;
    double hi = 2.0;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
};

struct HistogramResult {
    Histogram hist;
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_pairs = 0;
};

/// Trace-distance histogram over [0, 2] for random qubit pairs of the given
/// classes. Allowed pairs: (MixedBall, MixedBall), (MixedBall, Pure),
/// (Pure, Pure).
HistogramResult run_td_histogram(SlotKind first, SlotKind second, const ExperimentConfig& cfg);

struct StrengthBand {
    double g_mean = 0.0;
    double g_std = 0.0;
    double band_lo = 0.0;
    double band_hi = 0.0;
    double fraction_in_band = 0.0;
};

struct StrengthSamples {
    std::vector<QuartetRecord> flagged;  // index order
    CaseSummary summary;
    std::optional<StrengthBand> band;  // absent when nothing was flagged
};

/// Flagged-quartet strengths with the [<G> - dG, <G> + dG] band metadata.
StrengthSamples emit_strength_samples(const CaseStudy& cs, const ExperimentConfig& cfg);

struct ValidationConfig {
    std::uint64_t n_collinear = 100000;
    std::uint64_t n_pure_base = 100000;  // d = 2
    std::uint64_t n_pure_high = 10000;   // each d in 3..d_max
    int d_max = 8;
    std::uint64_t seed = 0;
    int n_streams = 0;
    std::uint64_t block_size = 1024;
    double contract = 1e-12;  // worst-case |numeric - analytic| bound
    ToleranceConfig tol{};

    void validate() const;
};

struct PrecisionClassReport {
    std::string klass;  // "collinear" or "pure"
    int d = 0;
    std::uint64_t n_pairs = 0;
    double worst_abs_error = 0.0;
};

struct PrecisionReport {
    std::vector<PrecisionClassReport> classes;
    double worst_abs_error = 0.0;
    double contract = 0.0;
    bool pass = false;
};

/// Closed-form versus eigensolver distances over the analytic-solvable pair
/// classes: collinear qubit pairs plus pure pairs for d = 2..d_max.
PrecisionReport run_precision_validation(const ValidationConfig& cfg);

}  // namespace tdmono
