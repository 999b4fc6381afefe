#include "polyineq/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "polyineq/bernstein.hpp"
#include "polyineq/body_io.hpp"
#include "polyineq/geometry.hpp"
#include "polyineq/oracle.hpp"

namespace polyineq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLedgerSlack = 1e-9;
constexpr double kFlagTol = 1e-6;
constexpr double kHypothesisTol = 1e-3;
constexpr int kScanDegree = 2;

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Strictly interior lattice points of the bounding box, row-major order.
std::vector<Vec> interior_lattice(const ConvexBody& K, int res, double margin) {
    Vec lo(2), hi(2);
    for (int k = 0; k < 2; ++k) {
        Vec e(2, 0.0);
        e[k] = 1.0;
        hi[k] = support(K, e);
        lo[k] = -support(K, -e);
    }
    std::vector<Vec> pts;
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            Vec p{lo[0] + (hi[0] - lo[0]) * (i + 1) / (res + 1),
                  lo[1] + (hi[1] - lo[1]) * (j + 1) / (res + 1)};
            bool inner = contains(K, p, 1e-12);
            for (int k = 0; k < 2 && inner; ++k) {
                Vec e(2, 0.0);
                e[k] = margin;
                inner = contains(K, p + e, 1e-12) && contains(K, p - e, 1e-12);
            }
            if (inner) pts.push_back(std::move(p));
        }
    }
    return pts;
}

// m x m interior product grid of the standard triangle via (a, b(1-a)).
std::vector<Vec> triangle_grid(int m) {
    std::vector<Vec> pts;
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= m; ++i) {
            const double a = static_cast<double>(i) / (m + 1);
            const double b = static_cast<double>(j) / (m + 1);
            pts.push_back(Vec{a, b * (1.0 - a)});
        }
    }
    return pts;
}

std::vector<Vec> direction_fan(int m) {
    std::vector<Vec> dirs;
    for (int k = 0; k < m; ++k) {
        const double th = kPi * k / m;
        dirs.push_back(Vec{std::cos(th), std::sin(th)});
    }
    return dirs;
}

// Probe points for the oracle-backed kinds: deep centroid plus the midpoints
// toward each vertex (compass half-radius points for a ball).
std::vector<Vec> probe_points(const ConvexBody& K) {
    if (const auto* ball = std::get_if<Ball>(&K.rep)) {
        std::vector<Vec> pts{ball->center};
        for (int k = 0; k < 4; ++k) {
            const double th = kPi * k / 2.0;
            pts.push_back(ball->center + (0.5 * ball->radius) * Vec{std::cos(th), std::sin(th)});
        }
        return pts;
    }
    auto verts = polytope_vertices(K);
    auto hull = (verts.size() > 2) ? hull2d(verts) : verts;
    Vec c(K.dim(), 0.0);
    for (const auto& v : hull) c = c + v;
    c = (1.0 / hull.size()) * c;
    std::vector<Vec> pts{c};
    for (const auto& v : hull) pts.push_back(0.5 * (c + v));
    return pts;
}

// Oracle settings used inside scans: deliberately coarser than the direct
// oracle entry points so grid scans stay interactive. The relaxation bias is
// one-sided (upward), which only loosens the flag threshold.
Config scan_oracle_config(const Config& cfg) {
    Config c = cfg;
    c.grid_resolution = std::min(cfg.grid_resolution, 13);
    c.boundary_samples = std::min(cfg.boundary_samples, 24);
    c.c_sweep = std::min(cfg.c_sweep, 9);
    return c;
}

void require_dim2(const ConvexBody& K, const char* kind) {
    if (K.dim() != 2)
        throw std::invalid_argument(std::string(kind) + " scan requires a 2-D body");
}

void require_simplex2(const ConvexBody& K, const char* kind) {
    require_dim2(K, kind);
    if (!std::holds_alternative<StandardSimplex>(K.rep))
        throw std::invalid_argument(std::string(kind) + " scan requires the standard simplex");
}

double ellipse_dispatch(const ConvexBody& K, const Vec& x, const Vec& y, const Config& cfg) {
    if (std::holds_alternative<StandardSimplex>(K.rep)) return best_ellipse_simplex(x, y);
    return best_ellipse(K, x, y, cfg).E;
}

void scan_alpha_map(const ConvexBody& K, const Config& cfg, ScanReport& r) {
    require_dim2(K, "alpha_map");
    for (const Vec& p : interior_lattice(K, cfg.grid_resolution, 1e-9)) {
        ScanRow row;
        row.x1 = p[0];
        row.x2 = p[1];
        try {
            row.alpha = alpha(K, p, cfg).alpha;
            const double g = gamma_functional(K, p, cfg);
            row.gamma = g;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        r.rows.push_back(std::move(row));
    }
}

void scan_ellipse_map(const ConvexBody& K, const Config& cfg, ScanReport& r) {
    require_dim2(K, "ellipse_map");
    const double w = minimal_width(K, cfg);
    for (const Vec& p : interior_lattice(K, cfg.grid_resolution, 1e-7)) {
        ScanRow row;
        row.x1 = p[0];
        row.x2 = p[1];
        row.w_min = w;
        try {
            row.alpha = alpha(K, p, cfg).alpha;
            row.E_x = worst_direction_E(K, p, cfg).first;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        r.rows.push_back(std::move(row));
    }
}

void scan_squarecompare(const ConvexBody& K, const Config& cfg, ScanReport& r) {
    require_simplex2(K, "squarecompare");
    const double w = minimal_width(K, cfg);
    const double target = std::sqrt(3.0 + std::sqrt(5.0));
    for (const Vec& p : triangle_grid(cfg.grid_resolution)) {
        ScanRow row;
        row.x1 = p[0];
        row.x2 = p[1];
        row.w_min = w;
        try {
            const double a = alpha(K, p, cfg).alpha;
            const double E = milev_E(p);
            row.alpha = a;
            row.E_x = E;
            const double stat = w * E * std::sqrt(1.0 - a * a);
            row.ratio_conj = stat / target;
            if (*row.ratio_conj > 1.0 + kLedgerSlack) {
                ++r.metadata.violations;  // proven bound, not an open question
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        r.rows.push_back(std::move(row));
    }
}

void scan_hypothesis(const ConvexBody& K, const Config& cfg, ScanReport& r) {
    require_simplex2(K, "hypothesis");
    const auto dirs = direction_fan(8);
    for (const Vec& p : triangle_grid(5)) {
        for (const Vec& y : dirs) {
            ScanRow row;
            row.x1 = p[0];
            row.x2 = p[1];
            row.y1 = y[0];
            row.y2 = y[1];
            try {
                row.E_xy = best_ellipse_simplex(p, y);
                row.gap_hyp = hypothesis_gap(p, y);
                if (*row.gap_hyp > kHypothesisTol) {
                    row.flagged = true;
                    ++r.metadata.findings;
                }
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            r.rows.push_back(std::move(row));
        }
    }
    (void)cfg;
}

void scan_oracle_family(const ConvexBody& K, const Config& cfg, ScanReport& r, bool with_ridge,
                        int fan) {
    require_dim2(K, with_ridge ? "oracle_compare" : "conjecture");
    const Config ocfg = scan_oracle_config(cfg);
    const GridSpec grid = make_grid(K, ocfg.grid_resolution, ocfg);
    const double w = minimal_width(K, cfg);
    const bool simplex = std::holds_alternative<StandardSimplex>(K.rep);
    const int n = kScanDegree;
    r.metadata.degree = n;
    for (const Vec& p : probe_points(K)) {
        for (const Vec& y : direction_fan(fan)) {
            ScanRow row;
            row.x1 = p[0];
            row.x2 = p[1];
            row.y1 = y[0];
            row.y2 = y[1];
            row.w_min = w;
            try {
                const double a = alpha(K, p, cfg).alpha;
                const double tau = maximal_chord(K, y);
                const double E = ellipse_dispatch(K, p, y, cfg);
                row.alpha = a;
                row.tau_y = tau;
                row.E_xy = E;
                row.bound_ellipse = n / E;
                row.bound_krry = 2.0 * n / (tau * std::sqrt(1.0 - a));
                row.bound_conj = 2.0 * n / (w * std::sqrt(1.0 - a * a));
                row.oracle_bern = bernstein_oracle(K, p, y, n, grid, ocfg.c_sweep, ocfg);
                row.ratio_conj = *row.oracle_bern / *row.bound_conj;
                if (*row.ratio_conj > 1.0 + kFlagTol) {
                    row.flagged = true;  // counterexample candidate, never asserted
                    ++r.metadata.findings;
                }
                if (simplex && *row.bound_ellipse > *row.bound_krry + kLedgerSlack)
                    ++r.metadata.violations;
                if (with_ridge) {
                    const double C = ridge_constant(K, p, y, cfg);
                    row.ridge = C;
                    if (C > 1.0 / E + kLedgerSlack) ++r.metadata.violations;
                    if (simplex && 1.0 / E > std::sqrt(2.0) * C + kLedgerSlack)
                        ++r.metadata.violations;
                }
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            r.rows.push_back(std::move(row));
        }
    }
}

void append_cell(std::string& line, const std::optional<double>& v) {
    line.push_back(',');
    if (v) line += fmt(*v);
}

void opt_to_json(json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

std::optional<double> opt_from_json(const json& j, const char* key) {
    if (auto it = j.find(key); it != j.end()) return it->get<double>();
    return std::nullopt;
}

}  // namespace

const char* const kCsvHeader =
    "x1,x2,y1,y2,alpha,gamma,tau_y,w_min,E_xy,E_x,ridge,bound_ellipse,bound_krry,bound_conj,"
    "oracle_bern,ratio_conj,gap_hyp";

const char* scan_kind_name(ScanKind kind) {
    switch (kind) {
        case ScanKind::alpha_map: return "alpha_map";
        case ScanKind::ellipse_map: return "ellipse_map";
        case ScanKind::conjecture: return "conjecture";
        case ScanKind::squarecompare: return "squarecompare";
        case ScanKind::hypothesis: return "hypothesis";
        case ScanKind::oracle_compare: return "oracle_compare";
    }
    throw std::logic_error("scan_kind_name: unreachable");
}

ScanKind scan_kind_from_name(const std::string& name) {
    for (ScanKind k : {ScanKind::alpha_map, ScanKind::ellipse_map, ScanKind::conjecture,
                       ScanKind::squarecompare, ScanKind::hypothesis, ScanKind::oracle_compare})
        if (name == scan_kind_name(k)) return k;
    throw std::invalid_argument("unknown scan kind: " + name);
}

ScanReport run_scan(ScanKind kind, const ConvexBody& K, const Config& cfg) {
    if (!cfg.valid()) throw std::invalid_argument("run_scan: invalid config");
    ScanReport r;
    r.metadata.kind = scan_kind_name(kind);
    r.metadata.body = body_description(K);
    r.metadata.body_json = body_to_json(K);
    r.metadata.config_json = cfg.to_json();
    r.metadata.config_hash = cfg.hash();
    r.metadata.seed = cfg.seed;
    switch (kind) {
        case ScanKind::alpha_map: scan_alpha_map(K, cfg, r); break;
        case ScanKind::ellipse_map: scan_ellipse_map(K, cfg, r); break;
        case ScanKind::squarecompare: scan_squarecompare(K, cfg, r); break;
        case ScanKind::hypothesis: scan_hypothesis(K, cfg, r); break;
        case ScanKind::conjecture: scan_oracle_family(K, cfg, r, false, 4); break;
        case ScanKind::oracle_compare: scan_oracle_family(K, cfg, r, true, 2); break;
    }
    return r;
}

std::string report_to_string(const ScanReport& r, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::ostringstream out;
        out << "# kind: " << r.metadata.kind << "\n";
        out << "# body: " << r.metadata.body << "\n";
        out << "# config_hash: " << r.metadata.config_hash << "\n";
        out << "# seed: " << r.metadata.seed << "\n";
        if (r.metadata.degree > 0) out << "# degree: " << r.metadata.degree << "\n";
        out << "# findings: " << r.metadata.findings << "\n";
        out << "# violations: " << r.metadata.violations << "\n";
        if (!r.metadata.timestamp.empty()) out << "# timestamp: " << r.metadata.timestamp << "\n";
        out << kCsvHeader << "\n";
        for (const ScanRow& row : r.rows) {
            std::string line;
            if (row.x1) line += fmt(*row.x1);
            append_cell(line, row.x2);
            append_cell(line, row.y1);
            append_cell(line, row.y2);
            append_cell(line, row.alpha);
            append_cell(line, row.gamma);
            append_cell(line, row.tau_y);
            append_cell(line, row.w_min);
            append_cell(line, row.E_xy);
            append_cell(line, row.E_x);
            append_cell(line, row.ridge);
            append_cell(line, row.bound_ellipse);
            append_cell(line, row.bound_krry);
            append_cell(line, row.bound_conj);
            append_cell(line, row.oracle_bern);
            append_cell(line, row.ratio_conj);
            append_cell(line, row.gap_hyp);
            out << line << "\n";
        }
        return out.str();
    }
    json meta{{"kind", r.metadata.kind},
              {"body", r.metadata.body},
              {"body_json", r.metadata.body_json},
              {"config", json::parse(r.metadata.config_json)},
              {"config_hash", r.metadata.config_hash},
              {"seed", r.metadata.seed},
              {"timestamp", r.metadata.timestamp},
              {"degree", r.metadata.degree},
              {"findings", r.metadata.findings},
              {"violations", r.metadata.violations}};
    json rows = json::array();
    for (const ScanRow& row : r.rows) {
        json jr = json::object();
        opt_to_json(jr, "x1", row.x1);
        opt_to_json(jr, "x2", row.x2);
        opt_to_json(jr, "y1", row.y1);
        opt_to_json(jr, "y2", row.y2);
        opt_to_json(jr, "alpha", row.alpha);
        opt_to_json(jr, "gamma", row.gamma);
        opt_to_json(jr, "tau_y", row.tau_y);
        opt_to_json(jr, "w_min", row.w_min);
        opt_to_json(jr, "E_xy", row.E_xy);
        opt_to_json(jr, "E_x", row.E_x);
        opt_to_json(jr, "ridge", row.ridge);
        opt_to_json(jr, "bound_ellipse", row.bound_ellipse);
        opt_to_json(jr, "bound_krry", row.bound_krry);
        opt_to_json(jr, "bound_conj", row.bound_conj);
        opt_to_json(jr, "oracle_bern", row.oracle_bern);
        opt_to_json(jr, "ratio_conj", row.ratio_conj);
        opt_to_json(jr, "gap_hyp", row.gap_hyp);
        if (row.flagged) jr["flagged"] = true;
        if (!row.error.empty()) jr["error"] = row.error;
        rows.push_back(std::move(jr));
    }
    json doc{{"metadata", std::move(meta)}, {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

void write_report(const ScanReport& r, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_report: cannot open " + path);
    out << report_to_string(r, format);
    if (!out) throw std::runtime_error("write_report: write failed for " + path);
}

ScanReport read_report_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_report_json: cannot open " + path);
    json doc = json::parse(in);
    ScanReport r;
    const json& meta = doc.at("metadata");
    r.metadata.kind = meta.at("kind").get<std::string>();
    r.metadata.body = meta.at("body").get<std::string>();
    r.metadata.body_json = meta.at("body_json").get<std::string>();
    r.metadata.config_json = meta.at("config").dump();
    r.metadata.config_hash = meta.at("config_hash").get<std::uint64_t>();
    r.metadata.seed = meta.at("seed").get<std::uint64_t>();
    r.metadata.timestamp = meta.at("timestamp").get<std::string>();
    r.metadata.degree = meta.at("degree").get<int>();
    r.metadata.findings = meta.at("findings").get<int>();
    r.metadata.violations = meta.at("violations").get<int>();
    for (const json& jr : doc.at("rows")) {
        ScanRow row;
        row.x1 = opt_from_json(jr, "x1");
        row.x2 = opt_from_json(jr, "x2");
        row.y1 = opt_from_json(jr, "y1");
        row.y2 = opt_from_json(jr, "y2");
        row.alpha = opt_from_json(jr, "alpha");
        row.gamma = opt_from_json(jr, "gamma");
        row.tau_y = opt_from_json(jr, "tau_y");
        row.w_min = opt_from_json(jr, "w_min");
        row.E_xy = opt_from_json(jr, "E_xy");
        row.E_x = opt_from_json(jr, "E_x");
        row.ridge = opt_from_json(jr, "ridge");
        row.bound_ellipse = opt_from_json(jr, "bound_ellipse");
        row.bound_krry = opt_from_json(jr, "bound_krry");
        row.bound_conj = opt_from_json(jr, "bound_conj");
        row.oracle_bern = opt_from_json(jr, "oracle_bern");
        row.ratio_conj = opt_from_json(jr, "ratio_conj");
        row.gap_hyp = opt_from_json(jr, "gap_hyp");
        row.flagged = jr.value("flagged", false);
        row.error = jr.value("error", std::string());
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace polyineq
