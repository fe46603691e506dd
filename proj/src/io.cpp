#include "tdmono/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace tdmono::io {

namespace {

std::string opt17(const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); }

std::string opt_json(const std::optional<double>& v) { return v ? fmt17(*v) : std::string("null"); }

void append_summary_json(std::ostringstream& os, const CaseSummary& s) {
    os << "{\"n_total\":" << s.n_total << ",\"n_flagged\":" << s.n_flagged
       << ",\"percentage\":" << fmt17(s.percentage);
    if (s.g_mean) {
        os << ",\"g_mean\":" << fmt17(*s.g_mean) << ",\"g_std\":" << fmt17(*s.g_std)
           << ",\"g_max\":" << fmt17(*s.g_max);
    }
    os << "}";
}

}  // namespace

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string config_json(const ExperimentConfig& cfg, const std::string& command) {
    std::ostringstream os;
    os << "{\"command\":\"" << command << "\"";
    if (cfg.case_study)
        os << ",\"case\":\"" << cfg.case_study->label() << "\",\"d\":" << cfg.case_study->dim;
    os << ",\"n_quartets\":" << cfg.n_quartets
       << ",\"n_repetitions\":" << cfg.n_repetitions << ",\"seed\":" << cfg.seed
       << ",\"n_streams\":" << cfg.n_streams << ",\"block_size\":" << cfg.block_size;
    if (!cfg.dims.empty()) {
        os << ",\"dims\":[";
        for (std::size_t i = 0; i < cfg.dims.size(); ++i) {
            if (i) os << ",";
            os << cfg.dims[i];
        }
        os << "]";
    }
    os << ",\"histogram_bins\":" << cfg.histogram_bins << "}";
    return os.str();
}

std::string table_csv(const std::vector<TableRow>& rows, std::uint64_t seed) {
    std::ostringstream os;
    os << "case,d,n_total,n_flagged,percentage,g_mean,g_std,g_max,seed\n";
    for (const TableRow& r : rows) {
        os << r.case_label << "," << r.d << "," << r.summary.n_total << "," << r.summary.n_flagged
           << "," << fmt17(r.summary.percentage) << "," << opt17(r.summary.g_mean) << ","
           << opt17(r.summary.g_std) << "," << opt17(r.summary.g_max) << "," << seed << "\n";
    }
    return os.str();
}

std::string table_json(const ExperimentConfig& cfg, const std::string& command,
                       const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "{\"config\":" << config_json(cfg, command) << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& r = rows[i];
        if (i) os << ",";
        os << "{\"row\":" << r.row << ",\"case\":\"" << r.case_label << "\",\"pretty\":\""
           << r.case_pretty << "\",\"d\":" << r.d << ",\"summary\":";
        append_summary_json(os, r.summary);
        os << "}";
    }
    os << "]}";
    return os.str();
}

std::string sweep_csv(const std::vector<SweepPoint>& points, std::uint64_t seed) {
    std::ostringstream os;
    os << "d,n_per_rep,reps,fraction_min,fraction_mean,fraction_max,"
          "g_mean_min,g_mean_mean,g_mean_max,seed\n";
    for (const SweepPoint& p : points) {
        os << p.d << "," << p.n_per_rep << "," << p.reps << "," << fmt17(p.fraction_min) << ","
           << fmt17(p.fraction_mean) << "," << fmt17(p.fraction_max) << ","
           << opt17(p.g_mean_min) << "," << opt17(p.g_mean_mean) << "," << opt17(p.g_mean_max)
           << "," << seed << "\n";
    }
    return os.str();
}

std::string sweep_json(const ExperimentConfig& cfg, const std::vector<SweepPoint>& points) {
    std::ostringstream os;
    os << "{\"config\":" << config_json(cfg, "sweep") << ",\"points\":[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& p = points[i];
        if (i) os << ",";
        os << "{\"d\":" << p.d << ",\"n_per_rep\":" << p.n_per_rep << ",\"reps\":" << p.reps
           << ",\"fraction_min\":" << fmt17(p.fraction_min)
           << ",\"fraction_mean\":" << fmt17(p.fraction_mean)
           << ",\"fraction_max\":" << fmt17(p.fraction_max)
           << ",\"g_mean_min\":" << opt_json(p.g_mean_min)
           << ",\"g_mean_mean\":" << opt_json(p.g_mean_mean)
           << ",\"g_mean_max\":" << opt_json(p.g_mean_max) << ",\"repetitions\":[";
        for (std::size_t k = 0; k < p.rep_summaries.size(); ++k) {
            if (k) os << ",";
            append_summary_json(os, p.rep_summaries[k]);
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string histogram_csv(const Histogram& h) {
    std::ostringstream os;
    os << "bin_lo,bin_hi,count\n";
    const int bins = static_cast<int>(h.counts.size());
    const double width = (h.hi - h.lo) / bins;
    for (int k = 0; k < bins; ++k) {
        os << fmt17(h.lo + k * width) << "," << fmt17(h.lo + (k + 1) * width) << "," << h.counts[k]
           << "\n";
    }
    return os.str();
}

std::string histogram_json(const ExperimentConfig& cfg, const std::string& pair_label,
                           const HistogramResult& r) {
    std::ostringstream os;
    os << "{\"config\":" << config_json(cfg, "hist") << ",\"pair\":\"" << pair_label
       << "\",\"n_pairs\":" << r.n_pairs << ",\"mean\":" << fmt17(r.mean)
       << ",\"std_error\":" << fmt17(r.std_error) << ",\"bins\":" << r.hist.counts.size()
       << ",\"lo\":" << fmt17(r.hist.lo) << ",\"hi\":" << fmt17(r.hist.hi) << "}";
    return os.str();
}

std::string strength_csv(const std::vector<QuartetRecord>& flagged) {
    std::ostringstream os;
    os << "index,stream_id,g\n";
    for (const QuartetRecord& rec : flagged)
        os << rec.index << "," << rec.stream_id << "," << fmt17(*rec.metrics.g) << "\n";
    return os.str();
}

std::string strength_json(const ExperimentConfig& cfg, const std::string& case_label,
                          const StrengthSamples& s) {
    std::ostringstream os;
    os << "{\"config\":" << config_json(cfg, "strength") << ",\"case\":\"" << case_label
       << "\",\"summary\":";
    append_summary_json(os, s.summary);
    if (s.band) {
        os << ",\"band\":{\"g_mean\":" << fmt17(s.band->g_mean)
           << ",\"g_std\":" << fmt17(s.band->g_std) << ",\"lo\":" << fmt17(s.band->band_lo)
           << ",\"hi\":" << fmt17(s.band->band_hi)
           << ",\"fraction_in_band\":" << fmt17(s.band->fraction_in_band) << "}";
    }
    os << "}";
    return os.str();
}

std::string validation_json(const ValidationConfig& cfg, const PrecisionReport& report) {
    std::ostringstream os;
    os << "{\"config\":{\"command\":\"validate\",\"n_collinear\":" << cfg.n_collinear
       << ",\"n_pure_base\":" << cfg.n_pure_base << ",\"n_pure_high\":" << cfg.n_pure_high
       << ",\"d_max\":" << cfg.d_max << ",\"seed\":" << cfg.seed
       << ",\"contract\":" << fmt17(cfg.contract) << "},\"classes\":[";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const PrecisionClassReport& c = report.classes[i];
        if (i) os << ",";
        os << "{\"class\":\"" << c.klass << "\",\"d\":" << c.d << ",\"n_pairs\":" << c.n_pairs
           << ",\"worst_abs_error\":" << fmt17(c.worst_abs_error) << "}";
    }
    os << "],\"worst_abs_error\":" << fmt17(report.worst_abs_error)
       << ",\"pass\":" << (report.pass ? "true" : "false") << "}";
    return os.str();
}

std::string ndjson_record(const QuartetRecord& rec) {
    std::ostringstream os;
    const QuartetMetrics& m = rec.metrics;
    os << "{\"d1\":" << fmt17(m.d1) << ",\"d2\":" << fmt17(m.d2) << ",\"dt1\":" << fmt17(m.dt1)
       << ",\"dt2\":" << fmt17(m.dt2) << ",\"nmutp\":" << (m.nmutp ? "true" : "false");
    if (m.g) os << ",\"g\":" << fmt17(*m.g);
    os << ",\"stream_id\":" << rec.stream_id << ",\"index\":" << rec.index << "}";
    return os.str();
}

std::string find_example_json(const ExperimentConfig& cfg, const std::array<double, 4>& target,
                              double tol, std::uint64_t max_draws, const FoundExample& found) {
    std::ostringstream os;
    os << "{\"config\":" << config_json(cfg, "find-example") << ",\"target\":[" << fmt17(target[0])
       << "," << fmt17(target[1]) << "," << fmt17(target[2]) << "," << fmt17(target[3])
       << "],\"tolerance\":" << fmt17(tol) << ",\"max_draws\":" << max_draws
       << ",\"index\":" << found.index << ",\"stream_id\":" << found.stream_id << ",\"metrics\":";
    const QuartetMetrics& m = found.metrics;
    os << "{\"d1\":" << fmt17(m.d1) << ",\"d2\":" << fmt17(m.d2) << ",\"dt1\":" << fmt17(m.dt1)
       << ",\"dt2\":" << fmt17(m.dt2) << ",\"g\":" << opt_json(m.g) << "}";
    if (found.quartet.rho.dim() == 2) {
        static const char* names[4] = {"rho", "zeta", "xi", "eta"};
        const DensityMatrix* states[4] = {&found.quartet.rho, &found.quartet.zeta,
                                          &found.quartet.xi, &found.quartet.eta};
        os << ",\"bloch\":{";
        for (int i = 0; i < 4; ++i) {
            const auto x = bloch_components(*states[i]);
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            const double theta = (r > 0.0) ? std::acos(std::clamp(x[2] / r, -1.0, 1.0)) : 0.0;
            double phi = std::atan2(x[1], x[0]);
            if (phi < 0.0) phi += 2.0 * std::numbers::pi;
            if (i) os << ",";
            os << "\"" << names[i] << "\":{\"r\":" << fmt17(r) << ",\"theta\":" << fmt17(theta)
               << ",\"phi\":" << fmt17(phi) << "}";
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

ExperimentConfig parse_config_file(const std::string& path, ExperimentConfig defaults) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config file " + path + ": expected an object");
    ExperimentConfig cfg = defaults;
    for (const auto& [key, value] : j.items()) {
        if (key == "n_quartets") cfg.n_quartets = value.get<std::uint64_t>();
        else if (key == "n_repetitions") cfg.n_repetitions = value.get<std::uint32_t>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "n_streams") cfg.n_streams = value.get<int>();
        else if (key == "block_size") cfg.block_size = value.get<std::uint64_t>();
        else if (key == "dims") cfg.dims = value.get<std::vector<int>>();
        else if (key == "histogram_bins") cfg.histogram_bins = value.get<int>();
        else if (key == "case") {
            // either {"row": N} or {"slots": ["mb","p","mb","mm"], "d": N}
            CaseStudy cs;
            if (value.contains("row")) {
                cs = CaseStudy::table1_row(value.at("row").get<int>());
            } else {
                const auto codes = value.at("slots").get<std::vector<std::string>>();
                if (codes.size() != 4)
                    throw std::invalid_argument("config file " + path +
                                                ": case.slots needs exactly 4 entries");
                for (int i = 0; i < 4; ++i) cs.slots[i] = slot_from_code(codes[i]);
                cs.dim = value.value("d", 2);
                cs.validate();
            }
            cfg.case_study = cs;
        } else {
            throw std::invalid_argument("config file " + path + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace tdmono::io
