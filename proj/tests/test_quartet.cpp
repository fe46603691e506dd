#include <cmath>

#include <doctest.h>

#include "tdmono/scan.hpp"
#include "test_helpers.hpp"

using namespace tdmono;

namespace {

DensityMatrix pure_from_amplitudes(complexd a0, complexd a1) {
    ComplexMatrix m(2);
    m(0, 0) = a0 * std::conj(a0);
    m(0, 1) = a0 * std::conj(a1);
    m(1, 0) = a1 * std::conj(a0);
    m(1, 1) = a1 * std::conj(a1);
    return DensityMatrix::from_matrix(std::move(m));
}

Quartet pure_pure_pure_maxmixed(double overlap) {
    // (|rho>, |zeta>) with Tr(rho zeta) = overlap, |xi> arbitrary pure, I/2
    return Quartet{pure_from_amplitudes(1.0, 0.0),
                   pure_from_amplitudes(std::sqrt(overlap), std::sqrt(1.0 - overlap)),
                   pure_from_amplitudes(std::sqrt(0.5), std::sqrt(0.5)),
                   maximally_mixed(2)};
}

}  // namespace

TEST_SUITE_BEGIN("quartet");

TEST_CASE("table rows map to the documented slot classes") {
    const CaseStudy row6 = CaseStudy::table1_row(6);
    CHECK(row6.slots[3] == SlotKind::MaxMixed);
    CHECK(row6.label() == "mb+mb+mb+mm");
    CHECK(row6.pretty() == "(rho,zeta),(xi,I/2)");

    const CaseStudy row3 = CaseStudy::table1_row(3);
    CHECK(row3.slots[1] == SlotKind::Pure);
    CHECK(row3.slots[3] == SlotKind::Pure);
    CHECK(row3.pretty() == "(rho,|zeta>),(xi,|eta>)");

    CHECK(CaseStudy::table1_row(11).label() == "p+p+p+mm");
    CHECK_THROWS_AS(CaseStudy::table1_row(0), std::invalid_argument);
    CHECK_THROWS_AS(CaseStudy::table1_row(12), std::invalid_argument);

    CaseStudy bad;
    bad.dim = 3;  // MixedBall slots at d != 2
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("quartet metrics against the closed forms") {
    const Quartet q = pure_pure_pure_maxmixed(0.7);
    const QuartetMetrics m = evaluate_quartet(q);

    // Closed forms: 2 sqrt(0.3), 1, 2 sqrt(0.51), pure-vs-center tensor 3/2.
    const double d1 = 2.0 * std::sqrt(0.3);
    const double dt1 = 2.0 * std::sqrt(0.51);
    CHECK(std::abs(m.d1 - d1) <= 1e-12);
    CHECK(std::abs(m.d2 - 1.0) <= 1e-12);
    CHECK(std::abs(m.dt1 - dt1) <= 1e-12);
    CHECK(std::abs(m.dt2 - 1.5) <= 1e-12);
    CHECK(m.d1 == doctest::Approx(1.095445).epsilon(1e-6));
    CHECK(m.dt1 == doctest::Approx(1.428286).epsilon(1e-6));

    CHECK(m.nmutp);
    REQUIRE(m.g.has_value());
    const double g = (d1 - 1.0) + (1.5 - dt1);
    CHECK(std::abs(*m.g - g) <= 1e-12);
    CHECK(*m.g == doctest::Approx(0.167159).epsilon(1e-5));
}

TEST_CASE("mixed-dimension quartets are rejected") {
    RngStream rng(12, 0);
    const Quartet q{sample_pure(2, rng), sample_pure(2, rng), sample_pure(3, rng),
                    sample_pure(3, rng)};
    CHECK_THROWS_AS(evaluate_quartet(q), std::invalid_argument);
}

TEST_CASE("ties are not flagged") {
    RngStream rng(3, 0);
    const DensityMatrix x = sample_state(SlotKind::MixedBall, 2, rng);
    const DensityMatrix y = sample_state(SlotKind::MixedBall, 2, rng);
    const Quartet q{x, y, x, y};  // identical pairs: both gaps are exact ties
    const QuartetMetrics m = evaluate_quartet(q);
    CHECK_FALSE(m.nmutp);
    CHECK_FALSE(m.g.has_value());
}

TEST_CASE("flag and strength are invariant under swapping the pairs") {
    RngStream rng(4, 0);
    const CaseStudy cs = CaseStudy::table1_row(7);
    int flagged = 0;
    for (int it = 0; it < 400 || flagged == 0; ++it) {
        REQUIRE(it < 5000);
        const Quartet q = generate_quartet(cs, rng);
        const QuartetMetrics m = evaluate_quartet(q);
        const Quartet swapped{q.xi, q.eta, q.rho, q.zeta};
        const QuartetMetrics ms = evaluate_quartet(swapped);
        CHECK(m.nmutp == ms.nmutp);
        if (m.nmutp) {
            ++flagged;
            CHECK(*m.g == *ms.g);
            CHECK(*m.g == std::abs(m.d1 - m.d2) + std::abs(m.dt1 - m.dt2));
            CHECK(*m.g > 2e-12);
        }
    }
}

TEST_CASE("pure-pure versus center: flagged exactly on the overlap window") {
    const double lo = std::sqrt(7.0) / 4.0;  // ~0.661438
    const double hi = 0.75;
    for (double c = 0.05; c < 1.0; c += 0.037) {
        const QuartetMetrics m = evaluate_quartet(pure_pure_pure_maxmixed(c));
        const bool inside = c > lo + 1e-9 && c < hi - 1e-9;
        if (std::abs(c - lo) < 1e-9 || std::abs(c - hi) < 1e-9) continue;
        CHECK(m.nmutp == inside);
    }
    // strength approaches (3 - sqrt(7))/2 at the right edge of the window
    const QuartetMetrics edge = evaluate_quartet(pure_pure_pure_maxmixed(0.75 - 1e-9));
    CHECK(*edge.g <= (3.0 - std::sqrt(7.0)) / 2.0 + 1e-8);
    CHECK(*edge.g >= (3.0 - std::sqrt(7.0)) / 2.0 - 1e-7);
}

TEST_CASE("all-pure quartets never reverse the ordering") {
    RngStream rng(5, 0);
    for (int it = 0; it < 300; ++it) {
        const int d = 2 + (it % 4);
        CaseStudy cs;
        cs.dim = d;
        cs.slots = {SlotKind::Pure, SlotKind::Pure, SlotKind::Pure, SlotKind::Pure};
        const QuartetMetrics m = evaluate_quartet(generate_quartet(cs, rng));
        CHECK_FALSE(m.nmutp);
    }
}

TEST_CASE("ordering can reverse for axis-aligned mixed quartets") {
    // All four states diagonal (Bloch vectors along z), exact rationals:
    // d1 = 0.6 > d2 = 0.5 while dt1 = 0.78 < dt2 = 0.875.
    const Quartet q{
        DensityMatrix::from_matrix(ComplexMatrix::from_rows({{0.8, 0.0}, {0.0, 0.2}})),
        maximally_mixed(2),
        DensityMatrix::from_matrix(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})),
        DensityMatrix::from_matrix(ComplexMatrix::from_rows({{0.75, 0.0}, {0.0, 0.25}}))};
    const QuartetMetrics m = evaluate_quartet(q);
    CHECK(std::abs(m.d1 - 0.6) <= 1e-13);
    CHECK(std::abs(m.d2 - 0.5) <= 1e-13);
    CHECK(std::abs(m.dt1 - 0.78) <= 1e-13);
    CHECK(std::abs(m.dt2 - 0.875) <= 1e-13);
    CHECK(m.nmutp);
    CHECK(*m.g == doctest::Approx(0.195).epsilon(1e-12));
}

TEST_CASE("generate_quartet honors the slot classes") {
    RngStream rng(6, 0);
    const Quartet q6 = generate_quartet(CaseStudy::table1_row(6), rng);
    CHECK((q6.eta.matrix() - maximally_mixed(2).matrix()).max_abs() == 0.0);

    const Quartet q3 = generate_quartet(CaseStudy::table1_row(3), rng);
    CHECK(std::abs(purity(q3.zeta) - 1.0) <= 1e-12);
    CHECK(std::abs(purity(q3.eta) - 1.0) <= 1e-12);

    const int n = 25000;  // 4 slots -> 1e5 ball states
    double psum = 0;
    for (int i = 0; i < n; ++i) {
        const Quartet q = generate_quartet(CaseStudy::table1_row(1), rng);
        psum += purity(q.rho) + purity(q.zeta) + purity(q.xi) + purity(q.eta);
    }
    CHECK(std::abs(psum / (4 * n) - 0.8) < 0.002);
}

TEST_CASE("scan counting and record order") {
    ScanOptions opt;
    opt.record_mode = RecordMode::All;
    CHECK_THROWS_AS(scan_case(CaseStudy::table1_row(1), 0, 1, 0, opt), std::invalid_argument);

    const ScanResult one = scan_case(CaseStudy::table1_row(1), 1, 1, 0, opt);
    CHECK(one.totals.n_total == 1);
    CHECK(one.records.size() == 1);
    CHECK(one.records[0].index == 0);

    opt.block_size = 64;
    const ScanResult many = scan_case(CaseStudy::table1_row(1), 1000, 1, 0, opt);
    CHECK(many.totals.n_total == 1000);
    REQUIRE(many.records.size() == 1000);
    for (std::size_t i = 0; i < many.records.size(); ++i) {
        CHECK(many.records[i].index == i);
        CHECK(many.records[i].stream_id == i / 64);
    }
}

TEST_CASE("replacing one pure state by the center creates reversals") {
    // per-draw flag probability is about 8.86%, so 1000 draws stay within
    // a generous binomial window and virtually never miss entirely
    ScanOptions opt;
    const ScanResult res = scan_case(CaseStudy::table1_row(11), 1000, 2024, 0, opt);
    CHECK(res.totals.n_flagged >= 1);
    CHECK(res.totals.n_flagged >= 40);
    CHECK(res.totals.n_flagged <= 140);
}

TEST_CASE("parallel scan reproduces the serial reference bitwise") {
    ScanOptions serial_opt;
    serial_opt.block_size = 512;
    serial_opt.record_mode = RecordMode::FlaggedOnly;
    const CaseStudy cs = CaseStudy::table1_row(1);
    const ScanResult ref = scan_case_serial(cs, 20000, 77, 0, serial_opt);

    for (int workers : {0, 1, 2, 4}) {
        ScanOptions opt = serial_opt;
        opt.n_workers = workers;
        const ScanResult par = scan_case(cs, 20000, 77, 0, opt);
        CHECK(par.totals.n_total == ref.totals.n_total);
        CHECK(par.totals.n_flagged == ref.totals.n_flagged);
        CHECK(par.totals.g_sum == ref.totals.g_sum);        // bitwise
        CHECK(par.totals.g_sum_sq == ref.totals.g_sum_sq);  // bitwise
        CHECK(par.totals.g_max == ref.totals.g_max);
        REQUIRE(par.records.size() == ref.records.size());
        for (std::size_t i = 0; i < ref.records.size(); ++i) {
            CHECK(par.records[i].index == ref.records[i].index);
            CHECK(par.records[i].metrics.d1 == ref.records[i].metrics.d1);
            CHECK(par.records[i].metrics.dt2 == ref.records[i].metrics.dt2);
        }
    }
}

TEST_CASE("find_example basics") {
    ScanOptions opt;
    opt.block_size = 256;

    // reflexivity: ask for the metrics of the first flagged quartet
    ScanOptions rec_opt = opt;
    rec_opt.record_mode = RecordMode::All;
    const ScanResult one = scan_case(CaseStudy::table1_row(1), 2000, 31, 0, rec_opt);
    const QuartetRecord* flagged_rec = nullptr;
    for (const QuartetRecord& r : one.records)
        if (r.metrics.nmutp) {
            flagged_rec = &r;
            break;
        }
    REQUIRE(flagged_rec != nullptr);
    const auto found = find_example(
        CaseStudy::table1_row(1),
        {flagged_rec->metrics.d1, flagged_rec->metrics.d2, flagged_rec->metrics.dt1,
         flagged_rec->metrics.dt2},
        1e-9, 2000, 31, 0, opt);
    REQUIRE(found.has_value());
    CHECK(found->index == flagged_rec->index);
    CHECK(found->metrics.d1 == flagged_rec->metrics.d1);

    // impossible target: equal states cannot have distant tensor squares
    const auto missing =
        find_example(CaseStudy::table1_row(1), {0.0, 0.0, 2.0, 2.0}, 0.01, 3000, 31, 0, opt);
    CHECK_FALSE(missing.has_value());

    CHECK_THROWS_AS(find_example(CaseStudy::table1_row(1), {3.0, 0.0, 0.0, 0.0}, 0.1, 10, 1, 0, opt),
                    std::invalid_argument);
}

TEST_SUITE_END();
