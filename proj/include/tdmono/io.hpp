#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tdmono/harness.hpp"

namespace tdmono::io {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Round-trip-safe float formatting for data files ("%.17g"); human-facing
/// tables use fmt6. Hand-rolled emitters keep output files byte-identical
/// across reruns of the same build.
std::string fmt17(double v);
std::string fmt6(double v);

void write_file(const std::string& path, const std::string& content);  // throws IoError
std::string read_file(const std::string& path);                        // throws IoError

/// Resolved-config echo embedded in every JSON artifact.
std::string config_json(const ExperimentConfig& cfg, const std::string& command);

struct TableRow {
    int row = 0;  // table position, 0 when not applicable
    std::string case_label;
    std::string case_pretty;
    int d = 2;
    CaseSummary summary;
};

// header: case,d,n_total,n_flagged,percentage,g_mean,g_std,g_max,seed
std::string table_csv(const std::vector<TableRow>& rows, std::uint64_t seed);
std::string table_json(const ExperimentConfig& cfg, const std::string& command,
                       const std::vector<TableRow>& rows);

std::string sweep_csv(const std::vector<SweepPoint>& points, std::uint64_t seed);
std::string sweep_json(const ExperimentConfig& cfg, const std::vector<SweepPoint>& points);

// header: bin_lo,bin_hi,count
std::string histogram_csv(const Histogram& h);
std::string histogram_json(const ExperimentConfig& cfg, const std::string& pair_label,
                           const HistogramResult& r);

// header: index,stream_id,g
std::string strength_csv(const std::vector<QuartetRecord>& flagged);
std::string strength_json(const ExperimentConfig& cfg, const std::string& case_label,
                          const StrengthSamples& s);

std::string validation_json(const ValidationConfig& cfg, const PrecisionReport& report);

std::string ndjson_record(const QuartetRecord& rec);  // one line, no terminator

std::string find_example_json(const ExperimentConfig& cfg, const std::array<double, 4>& target,
                              double tol, std::uint64_t max_draws, const FoundExample& found);

/// Parse fields of an ExperimentConfig from a JSON document; unknown keys
/// are rejected. Missing keys keep the passed-in defaults.
ExperimentConfig parse_config_file(const std::string& path, ExperimentConfig defaults);

}  // namespace tdmono::io
