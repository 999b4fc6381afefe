// Command-line front end: single-point queries, grid scans, reports, plots.
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure,
//             3 findings (flagged conjecture/hypothesis rows).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyineq/bernstein.hpp"
#include "polyineq/body_io.hpp"
#include "polyineq/chebyshev.hpp"
#include "polyineq/geometry.hpp"
#include "polyineq/oracle.hpp"
#include "polyineq/plot.hpp"
#include "polyineq/scan.hpp"

namespace {

using namespace polyineq;

struct Common {
    std::string body_path;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "csv";
};

Config load_config(const Common& c) {
    Config cfg = c.config_path.empty() ? Config{} : Config::from_file(c.config_path);
    if (c.seed) cfg.seed = *c.seed;
    if (!cfg.valid()) throw std::invalid_argument("invalid config");
    return cfg;
}

ConvexBody load_required_body(const Common& c) {
    if (c.body_path.empty()) throw CLI::ValidationError("--body FILE is required");
    return load_body_file(c.body_path);
}

void emit(const Common& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + c.out_path);
    out << text;
}

std::string kv(const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s = %.12g\n", key, v);
    return buf;
}

std::string vec_str(const Vec& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s << ", ";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", v[i]);
        s << buf;
    }
    s << ")";
    return s.str();
}

std::string iso_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--body", c.body_path, "body description file (JSON)");
    sub->add_option("--config", c.config_path, "config file (JSON)");
    sub->add_option("--seed", c.seed, "override the config seed");
    sub->add_option("--out", c.out_path, "output path (stdout if omitted)");
    sub->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-body functionals and sharp polynomial-inequality constants"};
    app.require_subcommand(1);

    Common c;
    std::vector<double> x, y, v;
    int n = 1, k = 0, resolution = 0;
    std::string kind_name, markov_kind = "interval", field = "alpha", report_path;
    double ia = -1.0, ib = 1.0, iw = 0.0;

    auto* s_alpha = app.add_subcommand("alpha", "generalized Minkowski functional at a point");
    add_common(s_alpha, c);
    s_alpha->add_option("-x,--point", x, "query point")->required()->expected(-1);

    auto* s_tau = app.add_subcommand("tau", "maximal chord in a direction");
    add_common(s_tau, c);
    s_tau->add_option("-v,--dir", v, "direction (not normalized)")->required()->expected(-1);

    auto* s_width = app.add_subcommand("width", "directional or minimal width");
    add_common(s_width, c);
    s_width->add_option("-v,--dir", v, "unit direction (omit for minimal width)")->expected(-1);

    auto* s_growth = app.add_subcommand("growth", "Chebyshev / homogeneous growth constants");
    add_common(s_growth, c);
    s_growth->add_option("-x,--point", x, "exterior point (Chebyshev growth)")->expected(-1);
    s_growth->add_option("-v,--dir", v, "direction (homogeneous growth)")->expected(-1);
    s_growth->add_option("-n,--degree", n, "degree")->required();

    auto* s_ellipse = app.add_subcommand("ellipse", "inscribed ellipse constant E(K, x, y)");
    add_common(s_ellipse, c);
    s_ellipse->add_option("-x,--point", x, "interior point")->required()->expected(-1);
    s_ellipse->add_option("-y,--dir", y, "unit direction (omit for worst direction)")->expected(-1);

    auto* s_ridge = app.add_subcommand("ridge", "ridge Bernstein constant C(K, x, y)");
    add_common(s_ridge, c);
    s_ridge->add_option("-x,--point", x, "interior point")->required()->expected(-1);
    s_ridge->add_option("-y,--dir", y, "unit direction")->required()->expected(-1);

    auto* s_markov = app.add_subcommand("markov", "Markov-type derivative bounds");
    add_common(s_markov, c);
    s_markov->add_option("--kind", markov_kind, "interval|symmetric|unit_ball|general")
        ->check(CLI::IsMember({"interval", "symmetric", "unit_ball", "general"}));
    s_markov->add_option("-n,--degree", n, "degree")->required();
    s_markov->add_option("-k,--deriv", k, "derivative order for the exact T_n^(k)(1) factor");
    s_markov->add_option("--ia", ia, "interval left endpoint");
    s_markov->add_option("--ib", ib, "interval right endpoint");
    s_markov->add_option("--width", iw, "body width (symmetric/general kinds)");

    auto* s_ocheb = app.add_subcommand("oracle-cheb", "LP oracle for the Chebyshev growth constant");
    add_common(s_ocheb, c);
    s_ocheb->add_option("-x,--point", x, "query point")->required()->expected(-1);
    s_ocheb->add_option("-n,--degree", n, "degree")->required();
    s_ocheb->add_option("--resolution", resolution, "grid resolution override");

    auto* s_obern = app.add_subcommand("oracle-bern", "LP oracle for the Bernstein factor");
    add_common(s_obern, c);
    s_obern->add_option("-x,--point", x, "interior point")->required()->expected(-1);
    s_obern->add_option("-y,--dir", y, "unit direction")->required()->expected(-1);
    s_obern->add_option("-n,--degree", n, "degree")->required();
    s_obern->add_option("--resolution", resolution, "grid resolution override");

    auto* s_scan = app.add_subcommand("scan", "grid scan producing a CSV/JSON report");
    add_common(s_scan, c);
    s_scan->add_option("--kind", kind_name,
                       "alpha_map|ellipse_map|conjecture|squarecompare|hypothesis|oracle_compare")
        ->required();

    auto* s_plot = app.add_subcommand("plot", "SVG heat map from a JSON report");
    add_common(s_plot, c);
    s_plot->add_option("--report", report_path, "JSON report produced by scan")->required();
    s_plot->add_option("--field", field, "report column to plot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const Config cfg = load_config(c);

        if (s_alpha->parsed()) {
            ConvexBody K = load_required_body(c);
            auto res = alpha(K, x, cfg);
            const double g = gamma_functional(K, x, cfg);
            emit(c, kv("alpha", res.alpha) + kv("gamma", g) +
                        kv("alpha_from_gamma", std::sqrt(std::max(0.0, 1.0 - g * g))) +
                        "witness = " + vec_str(res.witness.v) + "\n");
        } else if (s_tau->parsed()) {
            ConvexBody K = load_required_body(c);
            emit(c, kv("tau", maximal_chord(K, v)));
        } else if (s_width->parsed()) {
            ConvexBody K = load_required_body(c);
            if (v.empty()) {
                emit(c, kv("minimal_width", minimal_width(K, cfg)));
            } else {
                emit(c, kv("width", width_dir(K, DirectionalFunctional{normalized(v)})));
            }
        } else if (s_growth->parsed()) {
            ConvexBody K = load_required_body(c);
            std::string out;
            if (!x.empty()) {
                const double a = alpha(K, x, cfg).alpha;
                out += kv("alpha", a);
                out += kv("cheb_growth", cheb_growth(K, x, n, cfg));
                out += kv("extremal_value", extremal_value_real(K, x, cfg));
            }
            if (!v.empty()) out += kv("homogeneous_growth", homogeneous_growth(K, v, n));
            if (out.empty()) throw CLI::ValidationError("growth needs -x and/or -v");
            emit(c, out);
        } else if (s_ellipse->parsed()) {
            ConvexBody K = load_required_body(c);
            if (y.empty()) {
                auto [E, dir] = worst_direction_E(K, x, cfg);
                emit(c, kv("E_worst", E) + "direction = " + vec_str(dir) + "\n");
            } else {
                auto res = best_ellipse(K, x, normalized(y), cfg);
                emit(c, kv("E", res.E) + kv("certified", res.certified ? 1 : 0) +
                            "center = " + vec_str(res.ellipse.x - res.ellipse.a) + "\n");
            }
        } else if (s_ridge->parsed()) {
            ConvexBody K = load_required_body(c);
            emit(c, kv("ridge_constant", ridge_constant(K, x, normalized(y), cfg)));
        } else if (s_markov->parsed()) {
            MarkovKind mk = markov_kind == "interval"    ? MarkovKind::interval
                            : markov_kind == "symmetric" ? MarkovKind::symmetric
                            : markov_kind == "unit_ball" ? MarkovKind::unit_ball
                                                         : MarkovKind::general;
            std::string out;
            if (!c.body_path.empty()) {
                ConvexBody K = load_body_file(c.body_path);
                out += kv("markov_bound", markov_bound(mk, n, K, cfg));
            } else {
                MarkovParams p;
                p.a = ia;
                p.b = ib;
                p.width = iw;
                out += kv("markov_bound", markov_bound(mk, n, p));
            }
            if (k > 0) out += kv("vmarkov_factor", vmarkov_factor(n, k));
            emit(c, out);
        } else if (s_ocheb->parsed()) {
            ConvexBody K = load_required_body(c);
            const int res = resolution > 0 ? resolution : cfg.grid_resolution;
            GridSpec grid = make_grid(K, res, cfg);
            auto [val, poly] = chebyshev_oracle(K, x, n, grid);
            const double closed = cheb_growth(K, x, n, cfg);
            emit(c, kv("oracle", val) + kv("closed_form", closed) +
                        kv("rel_err", std::abs(val - closed) / std::max(1.0, std::abs(closed))));
        } else if (s_obern->parsed()) {
            ConvexBody K = load_required_body(c);
            const int res = resolution > 0 ? resolution : cfg.grid_resolution;
            GridSpec grid = make_grid(K, res, cfg);
            const Vec yn = normalized(y);
            const double val = bernstein_oracle(K, x, yn, n, grid, cfg.c_sweep, cfg);
            emit(c, kv("oracle_factor", val) + kv("n_normalized", val / n) +
                        kv("bound_ellipse", bernstein_bound(BernsteinKind::ellipse, n, K, x, yn, cfg)) +
                        kv("bound_conjecture",
                           bernstein_bound(BernsteinKind::conjecture, n, K, x, yn, cfg)));
        } else if (s_scan->parsed()) {
            ConvexBody K = load_required_body(c);
            ScanReport r = run_scan(scan_kind_from_name(kind_name), K, cfg);
            r.metadata.timestamp = iso_now();
            const ReportFormat f = (c.format == "json") ? ReportFormat::json : ReportFormat::csv;
            if (c.out_path.empty()) {
                std::cout << report_to_string(r, f);
            } else {
                write_report(r, f, c.out_path);
            }
            std::cerr << "rows: " << r.rows.size() << ", findings: " << r.metadata.findings
                      << ", violations: " << r.metadata.violations << "\n";
            if (r.metadata.violations > 0) return 2;
            if (r.metadata.findings > 0) return 3;
        } else if (s_plot->parsed()) {
            ScanReport r = read_report_json(report_path);
            if (c.out_path.empty()) throw CLI::ValidationError("plot requires --out FILE.svg");
            render_plot(r, field, c.out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
