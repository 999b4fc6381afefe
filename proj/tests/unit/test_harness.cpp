#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "polyineq/geometry.hpp"
#include "polyineq/plot.hpp"
#include "polyineq/scan.hpp"

using namespace polyineq;

namespace {
std::string tmp_path(const char* name) { return std::string("/tmp/polyineq_test_") + name; }
}  // namespace

TEST_CASE("config: round trip, validation and hashing") {
    Config cfg;
    CHECK(cfg.valid());
    auto back = Config::from_json(cfg.to_json());
    CHECK(back.hash() == cfg.hash());
    back.grid_resolution = 17;
    CHECK(back.hash() != cfg.hash());
    Config bad;
    bad.angle_cells = -1;
    CHECK(!bad.valid());
}

TEST_CASE("scan: kind names round trip") {
    for (auto k : {ScanKind::alpha_map, ScanKind::ellipse_map, ScanKind::conjecture,
                   ScanKind::squarecompare, ScanKind::hypothesis, ScanKind::oracle_compare})
        CHECK(scan_kind_from_name(scan_kind_name(k)) == k);
    CHECK_THROWS_AS(scan_kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("scan: simplex-only kinds reject other bodies") {
    auto box = make_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
    CHECK_THROWS_AS(run_scan(ScanKind::squarecompare, box), std::invalid_argument);
    CHECK_THROWS_AS(run_scan(ScanKind::hypothesis, box), std::invalid_argument);
}

TEST_CASE("scan: alpha map on a box equals the gauge per row") {
    auto box = make_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
    auto r = run_scan(ScanKind::alpha_map, box);
    CHECK(r.rows.size() > 10);
    CHECK(r.metadata.kind == "alpha_map");
    for (const auto& row : r.rows) {
        REQUIRE(row.x1.has_value());
        REQUIRE(row.alpha.has_value());
        CHECK(*row.alpha ==
              doctest::Approx(gauge(box, Vec{*row.x1, *row.x2})).epsilon(1e-8));
    }
}

TEST_CASE("scan: squarecompare statistic bracket and recomputable ratios") {
    auto tri = make_simplex(2);
    auto r = run_scan(ScanKind::squarecompare, tri);
    CHECK(r.metadata.violations == 0);
    const double limit = std::sqrt(3.0 + std::sqrt(5.0));
    double maxstat = 0.0;
    for (const auto& row : r.rows) {
        REQUIRE(row.ratio_conj.has_value());
        REQUIRE(row.w_min.has_value());
        REQUIRE(row.E_x.has_value());
        REQUIRE(row.alpha.has_value());
        const double a = *row.alpha;
        const double stat = *row.w_min * *row.E_x * std::sqrt(1.0 - a * a);
        // Every ratio column is recomputable from the raw fields of its row.
        CHECK(std::abs(*row.ratio_conj - stat / limit) <= 1e-12);
        maxstat = std::max(maxstat, stat);
    }
    CHECK(maxstat <= limit + 1e-9);
}

TEST_CASE("scan: hypothesis gaps are tiny and unflagged") {
    auto tri = make_simplex(2);
    auto r = run_scan(ScanKind::hypothesis, tri);
    CHECK(r.metadata.findings == 0);
    for (const auto& row : r.rows) {
        REQUIRE(row.gap_hyp.has_value());
        CHECK(*row.gap_hyp <= 1e-3);
        CHECK(!row.flagged);
    }
}

TEST_CASE("scan: determinism byte for byte") {
    auto tri = make_simplex(2);
    auto r1 = run_scan(ScanKind::squarecompare, tri);
    auto r2 = run_scan(ScanKind::squarecompare, tri);
    CHECK(report_to_string(r1, ReportFormat::csv) == report_to_string(r2, ReportFormat::csv));
    CHECK(report_to_string(r1, ReportFormat::json) == report_to_string(r2, ReportFormat::json));
}

TEST_CASE("report: empty scan serializes as a header-only CSV") {
    ScanReport r;
    r.metadata.kind = "alpha_map";
    auto csv = report_to_string(r, ReportFormat::csv);
    CHECK(csv.find(kCsvHeader) != std::string::npos);
    // No data rows after the header line.
    auto pos = csv.find(kCsvHeader);
    auto rest = csv.substr(pos + std::string(kCsvHeader).size());
    CHECK(rest.find_first_not_of("\r\n") == std::string::npos);
}

TEST_CASE("report: JSON round trip reproduces rows exactly") {
    auto tri = make_simplex(2);
    auto r = run_scan(ScanKind::hypothesis, tri);
    const auto path = tmp_path("roundtrip.json");
    write_report(r, ReportFormat::json, path);
    auto back = read_report_json(path);
    REQUIRE(back.rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(back.rows[i].x1 == r.rows[i].x1);
        CHECK(back.rows[i].y1 == r.rows[i].y1);
        CHECK(back.rows[i].gap_hyp == r.rows[i].gap_hyp);
        CHECK(back.rows[i].flagged == r.rows[i].flagged);
    }
    CHECK(back.metadata.config_hash == r.metadata.config_hash);
    std::remove(path.c_str());
}

TEST_CASE("report: config hash appears in both formats") {
    auto tri = make_simplex(2);
    auto r = run_scan(ScanKind::hypothesis, tri);
    auto want = std::to_string(r.metadata.config_hash);
    CHECK(report_to_string(r, ReportFormat::csv).find(want) != std::string::npos);
    CHECK(report_to_string(r, ReportFormat::json).find(want) != std::string::npos);
}

TEST_CASE("plot: valid, small, deterministic SVG") {
    auto tri = make_simplex(2);
    auto r = run_scan(ScanKind::alpha_map, tri);
    auto svg = render_plot_string(r, "alpha");
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.size() < 5u * 1024 * 1024);
    CHECK(svg == render_plot_string(r, "alpha"));
    CHECK_THROWS_AS(render_plot_string(r, "no_such_field"), std::invalid_argument);
    // A field the scan never produced has no samples.
    CHECK_THROWS_AS(render_plot_string(r, "gap_hyp"), std::invalid_argument);
}

TEST_CASE("plot: alpha level sets shrink toward the critical point") {
    auto tri = make_simplex(2);
    auto r = run_scan(ScanKind::alpha_map, tri);
    // Count rows under successive alpha thresholds: the sublevel sets nest
    // and shrink to the interior critical point, so counts are monotone.
    int prev = 0;
    for (double level : {0.45, 0.6, 0.75, 0.9}) {
        int count = 0;
        for (const auto& row : r.rows)
            if (row.alpha && *row.alpha <= level) ++count;
        CHECK(count >= prev);
        prev = count;
    }
    CHECK(prev > 0);
}
