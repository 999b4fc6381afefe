#include "polyineq/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "polyineq/body.hpp"
#include "polyineq/body_io.hpp"

namespace polyineq {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::optional<double> field_of(const ScanRow& row, const std::string& f) {
    if (f == "alpha") return row.alpha;
    if (f == "gamma") return row.gamma;
    if (f == "tau_y") return row.tau_y;
    if (f == "w_min") return row.w_min;
    if (f == "E_xy") return row.E_xy;
    if (f == "E_x") return row.E_x;
    if (f == "ridge") return row.ridge;
    if (f == "bound_ellipse") return row.bound_ellipse;
    if (f == "bound_krry") return row.bound_krry;
    if (f == "bound_conj") return row.bound_conj;
    if (f == "oracle_bern") return row.oracle_bern;
    if (f == "ratio_conj") return row.ratio_conj;
    if (f == "gap_hyp") return row.gap_hyp;
    throw std::invalid_argument("render_plot: unknown field " + f);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Five-stop sequential colormap, linearly interpolated.
std::string color_of(double t) {
    static const int stops[5][3] = {
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
    t = std::clamp(t, 0.0, 1.0) * 4.0;
    const int k = std::min(3, static_cast<int>(t));
    const double f = t - k;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[k][0] + f * (stops[k + 1][0] - stops[k][0]))),
                  static_cast<int>(std::lround(stops[k][1] + f * (stops[k + 1][1] - stops[k][1]))),
                  static_cast<int>(std::lround(stops[k][2] + f * (stops[k + 1][2] - stops[k][2]))));
    return buf;
}

double lattice_pitch(std::vector<double> vals, double fallback) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               vals.end());
    double pitch = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < vals.size(); ++i) pitch = std::min(pitch, vals[i] - vals[i - 1]);
    return std::isfinite(pitch) ? pitch : fallback;
}

std::vector<Vec> outline_points(const std::string& body_json) {
    if (body_json.empty()) return {};
    ConvexBody K = load_body(body_json);
    if (K.dim() != 2) return {};
    if (const auto* ball = std::get_if<Ball>(&K.rep)) {
        std::vector<Vec> pts;
        for (int i = 0; i < 128; ++i) {
            const double th = 2.0 * kPi * i / 128;
            pts.push_back(ball->center + ball->radius * Vec{std::cos(th), std::sin(th)});
        }
        return pts;
    }
    if (is_polytope(K)) {
        auto verts = polytope_vertices(K);
        return (verts.size() > 2) ? hull2d(verts) : verts;
    }
    return {};
}

}  // namespace

std::string render_plot_string(const ScanReport& r, const std::string& field) {
    struct Sample {
        double x, y, v;
    };
    std::vector<Sample> samples;
    for (const ScanRow& row : r.rows) {
        if (!row.error.empty() || !row.x1 || !row.x2) continue;
        if (auto v = field_of(row, field)) samples.push_back({*row.x1, *row.x2, *v});
    }
    if (samples.empty()) throw std::invalid_argument("render_plot: no 2-D samples for field " + field);

    auto outline = outline_points(r.metadata.body_json);

    double xmin = samples[0].x, xmax = xmin, ymin = samples[0].y, ymax = ymin;
    double vmin = samples[0].v, vmax = vmin;
    std::vector<double> xs, ys;
    for (const Sample& s : samples) {
        xmin = std::min(xmin, s.x);
        xmax = std::max(xmax, s.x);
        ymin = std::min(ymin, s.y);
        ymax = std::max(ymax, s.y);
        vmin = std::min(vmin, s.v);
        vmax = std::max(vmax, s.v);
        xs.push_back(s.x);
        ys.push_back(s.y);
    }
    for (const Vec& p : outline) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    const double spanx = std::max(xmax - xmin, 1e-9);
    const double spany = std::max(ymax - ymin, 1e-9);
    const double px = lattice_pitch(xs, spanx / 20.0);
    const double py = lattice_pitch(ys, spany / 20.0);

    const double W = 640.0, H = 520.0, m = 40.0, bar = 70.0;
    const double scale = std::min((W - 2 * m - bar) / spanx, (H - 2 * m) / spany);
    auto X = [&](double x) { return m + (x - xmin) * scale; };
    auto Y = [&](double y) { return H - m - (y - ymin) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W) << "\" height=\""
        << num(H) << "\" viewBox=\"0 0 " << num(W) << " " << num(H) << "\">\n";
    out << "<rect width=\"" << num(W) << "\" height=\"" << num(H) << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(m) << "\" y=\"24\" font-family=\"monospace\" font-size=\"14\">"
        << r.metadata.kind << " : " << field << "</text>\n";

    const double cw = px * scale, ch = py * scale;
    for (const Sample& s : samples) {
        const double t = (vmax > vmin) ? (s.v - vmin) / (vmax - vmin) : 0.5;
        out << "<rect x=\"" << num(X(s.x) - cw / 2) << "\" y=\"" << num(Y(s.y) - ch / 2)
            << "\" width=\"" << num(cw) << "\" height=\"" << num(ch) << "\" fill=\""
            << color_of(t) << "\"/>\n";
    }

    if (outline.size() > 2) {
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < outline.size(); ++i) {
            if (i) out << " ";
            out << num(X(outline[i][0])) << "," << num(Y(outline[i][1]));
        }
        out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }

    // Color scale: 64-band vertical gradient with numeric ticks.
    const double bx = W - m - bar + 20.0, bw = 18.0, by = m + 20.0, bh = H - 2 * m - 40.0;
    for (int i = 0; i < 64; ++i) {
        const double t = (63 - i) / 63.0;
        out << "<rect x=\"" << num(bx) << "\" y=\"" << num(by + bh * i / 64.0) << "\" width=\""
            << num(bw) << "\" height=\"" << num(bh / 64.0 + 0.5) << "\" fill=\"" << color_of(t)
            << "\"/>\n";
    }
    out << "<rect x=\"" << num(bx) << "\" y=\"" << num(by) << "\" width=\"" << num(bw)
        << "\" height=\"" << num(bh) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double ticks[3] = {vmax, 0.5 * (vmin + vmax), vmin};
    for (int i = 0; i < 3; ++i) {
        out << "<text x=\"" << num(bx + bw + 4) << "\" y=\"" << num(by + 5 + bh * i / 2.0)
            << "\" font-family=\"monospace\" font-size=\"11\">" << num(ticks[i]) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void render_plot(const ScanReport& r, const std::string& field, const std::string& path) {
    const std::string svg = render_plot_string(r, field);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render_plot: cannot open " + path);
    out << svg;
    if (!out) throw std::runtime_error("render_plot: write failed for " + path);
}

}  // namespace polyineq
