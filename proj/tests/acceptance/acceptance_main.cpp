// End-to-end acceptance gate: ten checks covering the closed forms, the LP
// oracles, the inscribed-ellipse solver and the scan harness, each with its
// pinned tolerance and runtime budget. One PASS/FAIL line per check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "polyineq/bernstein.hpp"
#include "polyineq/chebyshev.hpp"
#include "polyineq/geometry.hpp"
#include "polyineq/oracle.hpp"
#include "polyineq/scan.hpp"

using namespace polyineq;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(const char* name, bool ok, double elapsed, double budget, const char* detail) {
    const bool in_time = elapsed <= budget;
    if (!(ok && in_time)) ++g_failures;
    std::printf("%s - %s (%.1fs / budget %.0fs) %s%s\n", ok && in_time ? "PASS" : "FAIL", name,
                elapsed, budget, detail, !in_time ? " [over budget]" : "");
}

// Root-product form of the Chebyshev polynomial, independent of cheb_eval.
double cheb_product(int n, double x) {
    if (n == 0) return 1.0;
    double prod = std::ldexp(1.0, n - 1);
    for (int k = 1; k <= n; ++k) prod *= x - std::cos((2.0 * k - 1.0) * kPi / (2.0 * n));
    return prod;
}

Config fast_oracle_config() {
    Config cfg;
    cfg.boundary_samples = 8;
    return cfg;
}

void check1_chebyshev_consistency() {
    Timer t;
    double worst_cos = 0.0, worst_rel = 0.0;
    for (int n = 0; n <= 50; ++n)
        for (int k = 0; k < 1000; ++k) {
            double theta = kPi * (k + 0.5) / 1000.0;
            worst_cos = std::max(worst_cos,
                                 std::abs(cheb_eval(n, std::cos(theta)) - std::cos(n * theta)));
        }
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= 240; ++k) {
            double x = -3.0 + 6.0 * k / 240.0;
            double ref = cheb_product(n, x);
            double rel = std::abs(cheb_eval(n, x) - ref) / std::max(1.0, std::abs(ref));
            worst_rel = std::max(worst_rel, rel);
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "cos err %.2e, product rel %.2e", worst_cos, worst_rel);
    report("chebyshev branch/product consistency", worst_cos <= 1e-10 && worst_rel <= 1e-9,
           t.seconds(), 1.0, detail);
}

void check2_alpha() {
    Timer t;
    auto tri = make_simplex(2);
    double worst_cf = 0.0, worst_gamma = 0.0, worst_sym = 0.0;
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            double a = i / 11.0, b = (1.0 - a) * j / 11.0;
            Vec x{a, b};
            double expected = 1.0 - 2.0 * std::min({a, b, 1.0 - a - b});
            worst_cf = std::max(worst_cf, std::abs(alpha(tri, x).alpha - expected));
            double g = gamma_functional(tri, x);
            worst_gamma = std::max(
                worst_gamma, std::abs(std::sqrt(std::max(0.0, 1.0 - g * g)) - expected));
        }
    auto box = make_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
    auto ball = make_ball(Vec{0.0, 0.0}, 1.0);
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            Vec x{i / 5.0, j / 5.0};
            worst_sym = std::max(worst_sym, std::abs(alpha(box, x).alpha - gauge(box, x)));
            if (norm2(x) < 0.95)
                worst_sym = std::max(worst_sym, std::abs(alpha(ball, x).alpha - norm2(x)));
        }
    char detail[160];
    std::snprintf(detail, sizeof detail, "closed form %.2e, chord route %.2e, symmetric %.2e",
                  worst_cf, worst_gamma, worst_sym);
    report("alpha closed form / chord route / symmetric gauge",
           worst_cf <= 1e-8 && worst_gamma <= 1e-6 && worst_sym <= 1e-8, t.seconds(), 10.0,
           detail);
}

void check3_chebyshev_oracle() {
    Timer t;
    auto cfg = fast_oracle_config();
    double worst1 = 0.0, worst2 = 0.0;
    auto seg = make_box(Vec{-1.0}, Vec{1.0});
    auto gseg = make_grid(seg, 65, cfg);
    for (int n = 1; n <= 6; ++n)
        for (double x : {1.5, 2.0, 3.0}) {
            auto [val, p] = chebyshev_oracle(seg, Vec{x}, n, gseg, cfg);
            worst1 = std::max(worst1, std::abs(val / cheb_eval(n, x) - 1.0));
        }
    auto tri = make_simplex(2);
    auto gtri = make_grid(tri, 9, cfg);
    const std::vector<Vec> exterior = {{0.6, 0.6}, {1.0, 0.5}, {-0.3, -0.3},
                                       {0.8, -0.4}, {1.5, 1.5}};
    for (int n = 1; n <= 4; ++n)
        for (const auto& x : exterior) {
            auto [val, p] = chebyshev_oracle(tri, x, n, gtri, cfg);
            worst2 = std::max(worst2, std::abs(val / cheb_growth(tri, x, n) - 1.0));
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "d=1 rel %.2e, d=2 rel %.2e", worst1, worst2);
    report("chebyshev growth oracle vs T_n(alpha)", worst1 <= 1e-2 && worst2 <= 3e-2,
           t.seconds(), 120.0, detail);
}

void check4_homogeneous_oracle() {
    Timer t;
    auto cfg = fast_oracle_config();
    double worst1 = 0.0, worst2 = 0.0;
    auto seg = make_box(Vec{-1.0}, Vec{1.0});
    auto gseg = make_grid(seg, 65, cfg);
    for (int n = 1; n <= 6; ++n)
        worst1 = std::max(worst1, std::abs(leading_growth_oracle(seg, Vec{1.0}, n, gseg, cfg) /
                                               std::ldexp(1.0, n - 1) - 1.0));
    auto tri = make_simplex(2);
    auto gtri = make_grid(tri, 9, cfg);
    for (int n = 1; n <= 3; ++n)
        worst2 = std::max(
            worst2, std::abs(leading_growth_oracle(tri, Vec{1.0, 0.0}, n, gtri, cfg) /
                                 homogeneous_growth(tri, Vec{1.0, 0.0}, n) - 1.0));
    char detail[128];
    std::snprintf(detail, sizeof detail, "d=1 rel %.2e, d=2 rel %.2e", worst1, worst2);
    report("homogeneous growth oracle vs 2^(2n-1)/tau^n", worst1 <= 1e-2 && worst2 <= 3e-2,
           t.seconds(), 60.0, detail);
}

void check5_ellipse_solver() {
    Timer t;
    auto tri = make_simplex(2);
    std::mt19937_64 rng(20250823);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0.0, worst_pair_time = 0.0;
    for (int s = 0; s < 50; ++s) {
        double a = 0.05 + 0.9 * U(rng);
        double b = (1.0 - a) * (0.05 + 0.9 * U(rng));
        if (a + b > 0.97) {
            a *= 0.5;
            b *= 0.5;
        }
        double th = 2.0 * kPi * U(rng);
        Vec x{a, b}, y{std::cos(th), std::sin(th)};
        Timer pair;
        auto res = best_ellipse(tri, x, y);
        worst_pair_time = std::max(worst_pair_time, pair.seconds());
        worst = std::max(worst, std::abs(res.E / best_ellipse_simplex(x, y) - 1.0));
    }
    auto box = make_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
    auto disc = make_ball(Vec{0.0, 0.0}, 1.0);
    // Configurations where the centered construction is provably optimal.
    worst = std::max(worst, std::abs(best_ellipse(box, Vec{0.0, 0.0}, Vec{0.0, 1.0}).E /
                                         best_ellipse_symmetric(box, Vec{0.0, 0.0}, Vec{0.0, 1.0}) -
                                     1.0));
    worst = std::max(worst, std::abs(best_ellipse(box, Vec{0.3, 0.0}, Vec{1.0, 0.0}).E /
                                         best_ellipse_symmetric(box, Vec{0.3, 0.0}, Vec{1.0, 0.0}) -
                                     1.0));
    worst = std::max(worst,
                     std::abs(best_ellipse(disc, Vec{0.5, 0.0}, Vec{1.0, 0.0}).E /
                                  best_ellipse_symmetric(disc, Vec{0.5, 0.0}, Vec{1.0, 0.0}) -
                              1.0));
    char detail[128];
    std::snprintf(detail, sizeof detail, "worst rel %.2e, slowest pair %.2fs", worst,
                  worst_pair_time);
    report("inscribed ellipse solver vs closed forms", worst <= 1e-5 && worst_pair_time <= 1.0,
           t.seconds(), 60.0, detail);
}

void check6_bernstein_oracle() {
    Timer t;
    auto cfg = fast_oracle_config();
    auto tri = make_simplex(2);
    auto gtri = make_grid(tri, 9, cfg);
    const Vec centroid{1.0 / 3, 1.0 / 3};
    // Bracket: ridge constant 3/sqrt(2) below, 1/E = sqrt(6) above.
    const double lo = 0.98 * 3.0 / std::sqrt(2.0);
    const double hi = 1.02 * std::sqrt(6.0);
    bool ok = true;
    double vals[4];
    for (int n = 1; n <= 4; ++n) {
        double v =
            bernstein_oracle(tri, centroid, Vec{1.0, 0.0}, n, gtri, cfg.c_sweep, cfg) / n;
        vals[n - 1] = v;
        ok = ok && v >= lo && v <= hi;
    }
    auto seg = make_box(Vec{-1.0}, Vec{1.0});
    Config cfg1 = cfg;
    cfg1.c_margin = 1e-5;
    auto gseg = make_grid(seg, 33, cfg1);
    double worst1 = 0.0;
    for (int n = 1; n <= 4; ++n)
        worst1 = std::max(
            worst1,
            std::abs(bernstein_oracle(seg, Vec{0.0}, Vec{1.0}, n, gseg, cfg1.c_sweep, cfg1) / n -
                     1.0));
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "n-normalized %.4f %.4f %.4f %.4f in [%.4f, %.4f], d=1 rel %.2e", vals[0],
                  vals[1], vals[2], vals[3], lo, hi, worst1);
    report("bernstein factor oracle bracket", ok && worst1 <= 2e-2, t.seconds(), 120.0, detail);
}

void check7_squarecompare() {
    Timer t;
    auto tri = make_simplex(2);
    const double w = minimal_width(tri);
    double maxstat = 0.0;
    for (int i = 1; i <= 100; ++i)
        for (int j = 1; j <= 100; ++j) {
            double a = i / 101.0, b = (1.0 - a) * j / 101.0;
            Vec x{a, b};
            double al = 1.0 - 2.0 * std::min({a, b, 1.0 - a - b});
            double stat = w * milev_E(x) * std::sqrt(1.0 - al * al);
            maxstat = std::max(maxstat, stat);
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "max statistic %.6f vs sqrt(3+sqrt 5) = %.6f", maxstat,
                  std::sqrt(3.0 + std::sqrt(5.0)));
    report("width-ellipse product constant", maxstat >= 2.25 && maxstat <= 2.2883, t.seconds(),
           30.0, detail);
}

void check8_hypothesis() {
    Timer t;
    double worst = 0.0;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            double a = i / 6.0, b = (1.0 - a) * j / 6.0;
            for (int k = 0; k < 8; ++k) {
                double th = kPi * k / 8.0;
                worst = std::max(
                    worst, hypothesis_gap(Vec{a, b}, Vec{std::cos(th), std::sin(th)}));
            }
        }
    char detail[96];
    std::snprintf(detail, sizeof detail, "max |D V * E - 1| = %.2e", worst);
    report("pluripotential normal derivative identity", worst <= 1e-3, t.seconds(), 30.0, detail);
}

void check9_markov() {
    Timer t;
    double n = 1e4;
    double ratio = (2.0 * n / std::tan(kPi / (4.0 * n))) / (n * n);
    double rel = std::abs(ratio / (8.0 / kPi) - 1.0);
    MarkovParams p;
    p.width = 2.0;
    double g1 = markov_bound(MarkovKind::general, 1, p);
    double s1 = markov_bound(MarkovKind::symmetric, 1, p);
    char detail[128];
    std::snprintf(detail, sizeof detail, "asymptotic rel %.2e, n=1 ratio %.17g", rel, g1 / s1);
    report("markov factor asymptotics", rel <= 1e-4 && g1 == s1, t.seconds(), 5.0, detail);
}

void check10_ledger() {
    Timer t;
    auto tri = make_simplex(2);
    int violations = 0, findings = 0;
    for (auto kind : {ScanKind::alpha_map, ScanKind::ellipse_map, ScanKind::squarecompare,
                      ScanKind::hypothesis, ScanKind::conjecture, ScanKind::oracle_compare}) {
        auto r = run_scan(kind, tri);
        violations += r.metadata.violations;
        findings += r.metadata.findings;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "violations %d, findings %d", violations, findings);
    report("inequality ledger across default scans", violations == 0 && findings == 0,
           t.seconds(), 120.0, detail);
}

}  // namespace

int main() {
    check1_chebyshev_consistency();
    check2_alpha();
    check3_chebyshev_oracle();
    check4_homogeneous_oracle();
    check5_ellipse_solver();
    check6_bernstein_oracle();
    check7_squarecompare();
    check8_hypothesis();
    check9_markov();
    check10_ledger();
    std::printf("%d of 10 checks passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
