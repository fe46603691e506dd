// Command-line front end: every statistic is computed by the library, the
// commands only resolve options, run the corresponding experiment and write
// the declared file formats. Re-running a command with identical options
// reproduces identical files.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdmono/harness.hpp"
#include "tdmono/io.hpp"

namespace {

using namespace tdmono;

constexpr const char* kOutDirEnv = "TDMONO_OUT_DIR";

struct CommonOpts {
    std::string out_dir;
    std::string config_path;
    std::uint64_t seed = 0;
    std::uint64_t n = 1000000;
    int streams = 0;
    std::uint64_t block_size = 8192;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* streams_opt = nullptr;
    CLI::Option* block_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_n = true) {
    const char* env_dir = std::getenv(kOutDirEnv);
    c.out_dir = env_dir ? env_dir : ".";
    cmd->add_option("--out", c.out_dir, "Output directory (default: $TDMONO_OUT_DIR or .)");
    cmd->add_option("--config", c.config_path, "JSON config file; flags override its values");
    c.seed_opt = cmd->add_option("--seed", c.seed, "Master seed (generated and logged if omitted)");
    if (with_n) c.n_opt = cmd->add_option("--n", c.n, "Number of quartets/pairs");
    c.streams_opt = cmd->add_option("--streams", c.streams,
                                    "Concurrent workers (0 = all cores); does not affect results");
    c.block_opt = cmd->add_option("--block-size", c.block_size,
                                  "Quartets per RNG stream block (changes the sample partition)");
}

/// defaults -> config file -> explicit flags, then seed generation.
ExperimentConfig resolve_config(const CommonOpts& c) {
    ExperimentConfig cfg;
    cfg.n_quartets = c.n;
    if (!c.config_path.empty()) cfg = io::parse_config_file(c.config_path, cfg);
    if (c.n_opt && c.n_opt->count()) cfg.n_quartets = c.n;
    if (c.seed_opt->count()) cfg.seed = c.seed;
    if (c.streams_opt->count()) cfg.n_streams = c.streams;
    if (c.block_opt->count()) cfg.block_size = c.block_size;
    if (!c.seed_opt->count() && (c.config_path.empty() || cfg.seed == 0)) {
        std::random_device rd;
        cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::fprintf(stderr, "seed not supplied; generated seed: %llu\n",
                     static_cast<unsigned long long>(cfg.seed));
    }
    return cfg;
}

void log_config(const ExperimentConfig& cfg, const std::string& command) {
    std::fprintf(stderr, "resolved config: %s\n", io::config_json(cfg, command).c_str());
}

std::string path_join(const std::string& dir, const std::string& name) {
    if (dir.empty() || dir == ".") return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

std::vector<int> parse_rows(const std::string& spec) {
    std::vector<int> rows;
    if (spec == "all") {
        for (int r = 1; r <= CaseStudy::kTable1Rows; ++r) rows.push_back(r);
        return rows;
    }
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        const std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        const std::size_t dash = tok.find('-');
        try {
            if (dash != std::string::npos) {
                const int lo = std::stoi(tok.substr(0, dash));
                const int hi = std::stoi(tok.substr(dash + 1));
                for (int r = lo; r <= hi; ++r) rows.push_back(r);
            } else {
                rows.push_back(std::stoi(tok));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse row selection '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (int r : rows)
        if (r < 1 || r > CaseStudy::kTable1Rows)
            throw std::invalid_argument("row index " + std::to_string(r) + " outside 1..11");
    if (rows.empty()) throw std::invalid_argument("empty row selection");
    return rows;
}

std::vector<int> parse_dims(const std::string& spec) {
    std::vector<int> dims;
    const std::size_t colon = spec.find(':');
    try {
        if (colon != std::string::npos) {
            const int lo = std::stoi(spec.substr(0, colon));
            const int hi = std::stoi(spec.substr(colon + 1));
            for (int d = lo; d <= hi; ++d) dims.push_back(d);
        } else {
            std::size_t pos = 0;
            while (pos < spec.size()) {
                std::size_t comma = spec.find(',', pos);
                dims.push_back(std::stoi(
                    spec.substr(pos, comma == std::string::npos ? comma : comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse dimension list '" + spec + "'");
    }
    if (dims.empty()) throw std::invalid_argument("empty dimension list");
    return dims;
}

/// --slots beats --row beats a config-file case beats the row default.
CaseStudy parse_case(const ExperimentConfig& cfg, int row, bool row_given,
                     const std::string& slots, int d) {
    if (!slots.empty()) {
        CaseStudy cs;
        cs.dim = d;
        std::size_t pos = 0;
        int i = 0;
        while (pos < slots.size() && i < 4) {
            std::size_t comma = slots.find(',', pos);
            cs.slots[i++] = slot_from_code(
                slots.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (i != 4) throw std::invalid_argument("--slots needs exactly 4 comma-separated codes");
        cs.validate();
        return cs;
    }
    if (!row_given && cfg.case_study) return *cfg.case_study;
    return CaseStudy::table1_row(row);
}

int cmd_table1(const CommonOpts& common, const std::string& rows_spec) {
    ExperimentConfig cfg = resolve_config(common);
    log_config(cfg, "table1");
    const std::vector<int> rows = parse_rows(rows_spec);

    std::vector<io::TableRow> out_rows;
    std::printf("%-28s %10s %10s %10s %10s\n", "case", "percentage", "g_mean", "g_std", "g_max");
    for (int r : rows) {
        const CaseStudy cs = CaseStudy::table1_row(r);
        const auto t0 = std::chrono::steady_clock::now();
        const CaseSummary s = run_case(cs, cfg);
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        io::TableRow row{r, cs.label(), cs.pretty(), cs.dim, s};
        out_rows.push_back(row);
        std::printf("%-28s %10s %10s %10s %10s\n", cs.pretty().c_str(),
                    io::fmt6(s.percentage).c_str(),
                    s.g_mean ? io::fmt6(*s.g_mean).c_str() : "-",
                    s.g_std ? io::fmt6(*s.g_std).c_str() : "-",
                    s.g_max ? io::fmt6(*s.g_max).c_str() : "-");
        std::fprintf(stderr, "row %d done in %.1fs (%llu flagged of %llu)\n", r, dt,
                     static_cast<unsigned long long>(s.n_flagged),
                     static_cast<unsigned long long>(s.n_total));
    }
    io::write_file(path_join(common.out_dir, "table1.csv"), io::table_csv(out_rows, cfg.seed));
    io::write_file(path_join(common.out_dir, "table1.json"),
                   io::table_json(cfg, "table1", out_rows));
    return 0;
}

int cmd_sweep(const CommonOpts& common, const std::string& dims_spec, std::uint32_t reps) {
    ExperimentConfig cfg = resolve_config(common);
    cfg.dims = parse_dims(dims_spec);
    cfg.n_repetitions = reps;
    log_config(cfg, "sweep");

    const std::vector<SweepPoint> points = run_dimension_sweep(cfg);
    std::printf("%4s %12s %14s %14s %14s %12s\n", "d", "n_per_rep", "fraction_min",
                "fraction_mean", "fraction_max", "g_mean_mean");
    for (const SweepPoint& p : points) {
        std::printf("%4d %12llu %14s %14s %14s %12s\n", p.d,
                    static_cast<unsigned long long>(p.n_per_rep),
                    io::fmt6(p.fraction_min).c_str(), io::fmt6(p.fraction_mean).c_str(),
                    io::fmt6(p.fraction_max).c_str(),
                    p.g_mean_mean ? io::fmt6(*p.g_mean_mean).c_str() : "-");
    }
    io::write_file(path_join(common.out_dir, "sweep.csv"), io::sweep_csv(points, cfg.seed));
    io::write_file(path_join(common.out_dir, "sweep.json"), io::sweep_json(cfg, points));
    return 0;
}

SlotKind pair_slot(const std::string& word) {
    if (word == "mixed" || word == "mb") return SlotKind::MixedBall;
    if (word == "pure" || word == "p") return SlotKind::Pure;
    throw std::invalid_argument("histogram pair parts must be 'mixed' or 'pure'");
}

int cmd_hist(const CommonOpts& common, const std::string& pair_spec, int bins) {
    ExperimentConfig cfg = resolve_config(common);
    if (bins > 0) cfg.histogram_bins = bins;
    log_config(cfg, "hist");

    const std::size_t comma = pair_spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--pair expects two comma-separated classes");
    const SlotKind a = pair_slot(pair_spec.substr(0, comma));
    const SlotKind b = pair_slot(pair_spec.substr(comma + 1));

    const HistogramResult r = run_td_histogram(a, b, cfg);
    const std::string label = std::string(slot_code(a)) + "_" + slot_code(b);
    std::printf("pair (%s): mean TD = %s +- %s over %llu pairs\n", pair_spec.c_str(),
                io::fmt6(r.mean).c_str(), io::fmt6(r.std_error).c_str(),
                static_cast<unsigned long long>(r.n_pairs));
    io::write_file(path_join(common.out_dir, "hist_" + label + ".csv"),
                   io::histogram_csv(r.hist));
    io::write_file(path_join(common.out_dir, "hist_" + label + ".json"),
                   io::histogram_json(cfg, pair_spec, r));
    return 0;
}

int cmd_strength(const CommonOpts& common, int row, bool row_given, const std::string& slots,
                 int d) {
    ExperimentConfig cfg = resolve_config(common);
    const CaseStudy cs = parse_case(cfg, row, row_given, slots, d);
    cfg.case_study = cs;
    log_config(cfg, "strength");
    const StrengthSamples s = emit_strength_samples(cs, cfg);
    std::printf("case %s: %llu flagged of %llu", cs.pretty().c_str(),
                static_cast<unsigned long long>(s.summary.n_flagged),
                static_cast<unsigned long long>(s.summary.n_total));
    if (s.band)
        std::printf(", g_mean %s, band [%s, %s], in-band fraction %s",
                    io::fmt6(s.band->g_mean).c_str(), io::fmt6(s.band->band_lo).c_str(),
                    io::fmt6(s.band->band_hi).c_str(), io::fmt6(s.band->fraction_in_band).c_str());
    std::printf("\n");
    io::write_file(path_join(common.out_dir, "strength_" + cs.label() + ".csv"),
                   io::strength_csv(s.flagged));
    io::write_file(path_join(common.out_dir, "strength_" + cs.label() + ".json"),
                   io::strength_json(cfg, cs.label(), s));
    return 0;
}

int cmd_scan(const CommonOpts& common, int row, bool row_given, const std::string& slots, int d,
             const std::string& out_file) {
    ExperimentConfig cfg = resolve_config(common);
    const CaseStudy cs = parse_case(cfg, row, row_given, slots, d);
    cfg.case_study = cs;
    log_config(cfg, "scan");
    const ScanResult res =
        scan_case(cs, cfg.n_quartets, cfg.seed, 0, cfg.scan_options(RecordMode::All));
    std::string body;
    body.reserve(res.records.size() * 96);
    for (const QuartetRecord& rec : res.records) {
        body += io::ndjson_record(rec);
        body += '\n';
    }
    const std::string path =
        out_file.empty() ? path_join(common.out_dir, "scan.ndjson") : out_file;
    io::write_file(path, body);
    const CaseSummary s = CaseSummary::from_partial(res.totals);
    std::printf("case %s: %llu flagged of %llu (%s%%), records written to %s\n",
                cs.pretty().c_str(), static_cast<unsigned long long>(s.n_flagged),
                static_cast<unsigned long long>(s.n_total), io::fmt6(s.percentage).c_str(),
                path.c_str());
    return 0;
}

int cmd_validate(const CommonOpts& common, std::uint64_t pairs, std::uint64_t pairs_high,
                 int d_max, double contract) {
    ExperimentConfig base = resolve_config(common);
    ValidationConfig cfg;
    cfg.n_collinear = pairs;
    cfg.n_pure_base = pairs;
    cfg.n_pure_high = pairs_high;
    cfg.d_max = d_max;
    cfg.seed = base.seed;
    cfg.n_streams = base.n_streams;
    cfg.contract = contract;
    std::fprintf(stderr,
                 "resolved config: {\"command\":\"validate\",\"n_collinear\":%llu,"
                 "\"n_pure_base\":%llu,\"n_pure_high\":%llu,\"d_max\":%d,\"seed\":%llu}\n",
                 static_cast<unsigned long long>(cfg.n_collinear),
                 static_cast<unsigned long long>(cfg.n_pure_base),
                 static_cast<unsigned long long>(cfg.n_pure_high), cfg.d_max,
                 static_cast<unsigned long long>(cfg.seed));

    const PrecisionReport report = run_precision_validation(cfg);
    for (const PrecisionClassReport& c : report.classes)
        std::printf("%-10s d=%d  n=%-8llu worst |numeric - analytic| = %s\n", c.klass.c_str(), c.d,
                    static_cast<unsigned long long>(c.n_pairs),
                    io::fmt6(c.worst_abs_error).c_str());
    std::printf("overall worst error %s against contract %s: %s\n",
                io::fmt6(report.worst_abs_error).c_str(), io::fmt6(report.contract).c_str(),
                report.pass ? "PASS" : "FAIL");
    io::write_file(path_join(common.out_dir, "validate.json"),
                   io::validation_json(cfg, report));
    return report.pass ? 0 : 1;
}

int cmd_find_example(const CommonOpts& common, const std::string& target_spec, double tol,
                     int row, bool row_given, const std::string& slots, int d,
                     std::uint64_t max_draws) {
    ExperimentConfig cfg = resolve_config(common);
    const CaseStudy cs = parse_case(cfg, row, row_given, slots, d);
    cfg.case_study = cs;
    log_config(cfg, "find-example");

    std::array<double, 4> target{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t comma = target_spec.find(',', pos);
        if ((comma == std::string::npos) != (i == 3))
            throw std::invalid_argument("--target expects four comma-separated distances");
        try {
            target[i] = std::stod(
                target_spec.substr(pos, comma == std::string::npos ? comma : comma - pos));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse --target value");
        }
        pos = comma + 1;
    }

    const auto found = find_example(cs, target, tol, max_draws, cfg.seed, 0, cfg.scan_options());
    if (!found) {
        std::printf("no matching quartet within %llu draws\n",
                    static_cast<unsigned long long>(max_draws));
        return 1;
    }
    const QuartetMetrics& m = found->metrics;
    std::printf("found quartet at index %llu (stream %llu):\n",
                static_cast<unsigned long long>(found->index),
                static_cast<unsigned long long>(found->stream_id));
    std::printf("  d1=%s d2=%s dt1=%s dt2=%s g=%s\n", io::fmt6(m.d1).c_str(),
                io::fmt6(m.d2).c_str(), io::fmt6(m.dt1).c_str(), io::fmt6(m.dt2).c_str(),
                m.g ? io::fmt6(*m.g).c_str() : "-");
    if (cs.dim == 2) {
        static const char* names[4] = {"rho", "zeta", "xi", "eta"};
        const DensityMatrix* states[4] = {&found->quartet.rho, &found->quartet.zeta,
                                          &found->quartet.xi, &found->quartet.eta};
        for (int i = 0; i < 4; ++i) {
            const auto x = bloch_components(*states[i]);
            const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            const double theta = (r > 0.0) ? std::acos(std::clamp(x[2] / r, -1.0, 1.0)) : 0.0;
            double phi = std::atan2(x[1], x[0]);
            if (phi < 0.0) phi += 2.0 * std::numbers::pi;
            std::printf("  %-5s r=%s theta=%s phi=%s\n", names[i], io::fmt6(r).c_str(),
                        io::fmt6(theta).c_str(), io::fmt6(phi).c_str());
        }
    }
    io::write_file(path_join(common.out_dir, "find_example.json"),
                   io::find_example_json(cfg, target, tol, max_draws, *found));
    return 0;
}

int cmd_sample(const CommonOpts& common, const std::string& kind, int d,
               const std::string& slot) {
    ExperimentConfig cfg = resolve_config(common);
    log_config(cfg, "sample");
    RngStream rng(cfg.seed, 0);
    const std::uint64_t n = cfg.n_quartets;
    std::string body;

    auto matrix_line = [](const ComplexMatrix& m) {
        std::string s = "{\"d\":" + std::to_string(m.dim()) + ",\"re\":[";
        for (int i = 0; i < m.dim(); ++i) {
            if (i) s += ",";
            s += "[";
            for (int j = 0; j < m.dim(); ++j) {
                if (j) s += ",";
                s += io::fmt17(m(i, j).real());
            }
            s += "]";
        }
        s += "],\"im\":[";
        for (int i = 0; i < m.dim(); ++i) {
            if (i) s += ",";
            s += "[";
            for (int j = 0; j < m.dim(); ++j) {
                if (j) s += ",";
                s += io::fmt17(m(i, j).imag());
            }
            s += "]";
        }
        s += "]}";
        return s;
    };

    std::string filename;
    if (kind == "ball" || kind == "sphere") {
        filename = "sample_" + kind + ".csv";
        body = "norm,theta,phi\n";
        for (std::uint64_t i = 0; i < n; ++i) {
            const BlochVector b =
                (kind == "ball") ? sample_bloch_ball(rng) : sample_bloch_sphere(rng);
            body += io::fmt17(b.norm) + "," + io::fmt17(b.theta) + "," + io::fmt17(b.phi) + "\n";
        }
    } else if (kind == "simplex") {
        filename = "sample_simplex.csv";
        for (std::uint64_t i = 0; i < n; ++i) {
            const ProbVector p = sample_simplex(d, rng);
            for (int j = 0; j < p.dim(); ++j) body += (j ? "," : "") + io::fmt17(p.probs[j]);
            body += "\n";
        }
    } else if (kind == "unitary" || kind == "ginibre") {
        filename = "sample_" + kind + ".ndjson";
        for (std::uint64_t i = 0; i < n; ++i) {
            const UnitaryMatrix u =
                (kind == "unitary") ? sample_haar_unitary(d, rng) : sample_unitary_ginibre(d, rng);
            body += matrix_line(u.matrix()) + "\n";
        }
    } else if (kind == "pure" || kind == "state") {
        filename = "sample_" + kind + ".ndjson";
        const SlotKind sk = (kind == "pure") ? SlotKind::Pure : slot_from_code(slot);
        for (std::uint64_t i = 0; i < n; ++i) {
            const DensityMatrix x = sample_state(sk, d, rng, cfg.tol);
            body += matrix_line(x.matrix()) + "\n";
        }
    } else {
        throw std::invalid_argument("unknown sample kind '" + kind +
                                    "' (ball, sphere, simplex, unitary, ginibre, pure, state)");
    }
    const std::string path = path_join(common.out_dir, filename);
    io::write_file(path, body);
    std::printf("wrote %llu samples to %s\n", static_cast<unsigned long long>(n), path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Monte Carlo study of trace-distance ordering under tensor squares.\n"
        "Quartets (rho,zeta),(xi,eta) are flagged when one pair is the more\n"
        "distinguishable one for single copies but the less distinguishable\n"
        "one for two copies. Case rows follow the standard table order:\n"
        "  1 (rho,zeta),(xi,eta)      2 (rho,zeta),(xi,|eta>)\n"
        "  3 (rho,|zeta>),(xi,|eta>)  4 (rho,zeta),(|xi>,|eta>)\n"
        "  5 (rho,|zeta>),(|xi>,|eta>) 6 (rho,zeta),(xi,I/2)\n"
        "  7 (rho,zeta),(|xi>,I/2)    8 (rho,|zeta>),(xi,I/2)\n"
        "  9 (rho,|zeta>),(|xi>,I/2) 10 (|rho>,|zeta>),(xi,I/2)\n"
        " 11 (|rho>,|zeta>),(|xi>,I/2)\n"
        "Exit codes: 0 ok, 1 tolerance/search failure, 2 usage error, 3 I/O error."};
    app.require_subcommand(1);

    CommonOpts o_table1, o_sweep, o_hist, o_strength, o_scan, o_validate, o_find, o_sample;

    auto* table1 = app.add_subcommand("table1", "Per-case flagged percentage and strength stats");
    std::string rows_spec = "all";
    table1->add_option("--rows", rows_spec, "Row selection: 'all', '1,3', or '2-5'");
    add_common(table1, o_table1);

    auto* sweep = app.add_subcommand("sweep", "Flagged fraction and strength vs dimension");
    std::string dims_spec = "2:6";
    std::uint32_t reps = 3;
    sweep->add_option("--dims", dims_spec, "Dimensions: '2:6' or '2,3,5'");
    sweep->add_option("--reps", reps, "Independent repetitions per dimension");
    add_common(sweep, o_sweep);

    auto* hist = app.add_subcommand("hist", "Trace-distance histogram for random qubit pairs");
    std::string pair_spec = "mixed,mixed";
    int bins = 0;
    hist->add_option("--pair", pair_spec, "'mixed,mixed', 'mixed,pure' or 'pure,pure'");
    hist->add_option("--bins", bins, "Histogram bins over [0,2] (default 200)");
    add_common(hist, o_hist);

    auto* strength = app.add_subcommand("strength", "Emit per-quartet strength samples");
    int s_row = 1, s_d = 2;
    std::string s_slots;
    auto* s_row_opt = strength->add_option("--row", s_row, "Table row (1..11)");
    strength->add_option("--slots", s_slots, "Custom slots, e.g. 'ms,ms,ms,ms'");
    strength->add_option("--d", s_d, "Dimension for custom slots");
    add_common(strength, o_strength);

    auto* scan = app.add_subcommand("scan", "Stream per-quartet records to NDJSON");
    int sc_row = 1, sc_d = 2;
    std::string sc_slots, sc_out_file;
    auto* sc_row_opt = scan->add_option("--row", sc_row, "Table row (1..11)");
    scan->add_option("--slots", sc_slots, "Custom slots, e.g. 'ms,ms,ms,ms'");
    scan->add_option("--d", sc_d, "Dimension for custom slots");
    scan->add_option("--out-file", sc_out_file, "NDJSON path (default <out>/scan.ndjson)");
    add_common(scan, o_scan);

    auto* validate = app.add_subcommand(
        "validate", "Cross-check eigensolver distances against closed forms");
    std::uint64_t v_pairs = 100000, v_pairs_high = 10000;
    int v_dmax = 8;
    double v_contract = 1e-12;
    validate->add_option("--pairs", v_pairs, "Pairs per class at d=2");
    validate->add_option("--pairs-high", v_pairs_high, "Pure pairs per dimension for d>=3");
    validate->add_option("--dmax", v_dmax, "Largest pure-state dimension");
    validate->add_option("--contract", v_contract, "Worst-error bound (default 1e-12)");
    add_common(validate, o_validate, /*with_n=*/false);

    auto* find = app.add_subcommand("find-example", "Search for a flagged quartet near a target");
    std::string f_target = "0.80,0.76,0.87,1.07";
    double f_tol = 0.02;
    int f_row = 1, f_d = 2;
    std::string f_slots;
    std::uint64_t f_max_draws = 10000000;
    find->add_option("--target", f_target, "Four target distances d1,d2,dt1,dt2");
    find->add_option("--tol", f_tol, "Max-norm tolerance around the target");
    auto* f_row_opt = find->add_option("--row", f_row, "Table row (1..11)");
    find->add_option("--slots", f_slots, "Custom slots");
    find->add_option("--d", f_d, "Dimension for custom slots");
    find->add_option("--max-draws", f_max_draws, "Search budget in quartets");
    add_common(find, o_find, /*with_n=*/false);

    auto* sample = app.add_subcommand("sample", "Dump raw samples from one generator");
    std::string smp_kind = "ball", smp_slot = "ms";
    int smp_d = 2;
    sample->add_option("--kind", smp_kind,
                       "ball, sphere, simplex, unitary, ginibre, pure or state");
    sample->add_option("--d", smp_d, "Dimension");
    sample->add_option("--slot", smp_slot, "Slot code for --kind state (mb, ms, p, mm)");
    add_common(sample, o_sample);

    try {
        app.parse(argc, argv);
        if (table1->parsed()) return cmd_table1(o_table1, rows_spec);
        if (sweep->parsed()) return cmd_sweep(o_sweep, dims_spec, reps);
        if (hist->parsed()) return cmd_hist(o_hist, pair_spec, bins);
        if (strength->parsed())
            return cmd_strength(o_strength, s_row, s_row_opt->count() > 0, s_slots, s_d);
        if (scan->parsed())
            return cmd_scan(o_scan, sc_row, sc_row_opt->count() > 0, sc_slots, sc_d, sc_out_file);
        if (validate->parsed())
            return cmd_validate(o_validate, v_pairs, v_pairs_high, v_dmax, v_contract);
        if (find->parsed())
            return cmd_find_example(o_find, f_target, f_tol, f_row, f_row_opt->count() > 0,
                                    f_slots, f_d, f_max_draws);
        if (sample->parsed()) return cmd_sample(o_sample, smp_kind, smp_d, smp_slot);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const tdmono::io::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
