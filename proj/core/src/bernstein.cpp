#include "polyineq/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyineq/geometry.hpp"
#include "polyineq/lp.hpp"

namespace polyineq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden-section maximization of f on [lo, hi] (unimodal refinement step
// after a sweep localized the maximizer).
double golden_max(const std::function<double(double)>& f, double lo, double hi, int iters) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

struct Facets {
    std::vector<Vec> normals;
    std::vector<double> offsets;
};

// Facet cover used by the ellipse solver: exact H-representation where one
// exists, support cuts for smooth 2-D bodies.
Facets facet_cover(const ConvexBody& K, int cuts) {
    if (const auto* ball = std::get_if<Ball>(&K.rep)) {
        if (K.dim() != 2)
            throw std::invalid_argument("best_ellipse: smooth bodies supported in d = 2 only");
        Facets f;
        for (int i = 0; i < cuts; ++i) {
            const double th = 2.0 * kPi * i / cuts;
            Vec n{std::cos(th), std::sin(th)};
            f.offsets.push_back(dot(n, ball->center) + ball->radius);
            f.normals.push_back(std::move(n));
        }
        return f;
    }
    HPolytope h = to_hrep(K);
    return Facets{std::move(h.normals), std::move(h.offsets)};
}

// Worst facet violation of the ellipse (x, a, y, b):
// max_i <n_i, x - a> + sqrt(<n_i, a>^2 + b^2 <n_i, y>^2) - c_i.
double max_violation(const Facets& f, const Vec& x, const Vec& a, const Vec& y, double b,
                     std::size_t* arg = nullptr) {
    double worst = -kInf;
    for (std::size_t i = 0; i < f.normals.size(); ++i) {
        const Vec& n = f.normals[i];
        const double na = dot(n, a);
        const double ny = dot(n, y);
        const double g = dot(n, x) - na + std::sqrt(na * na + b * b * ny * ny) - f.offsets[i];
        if (g > worst) {
            worst = g;
            if (arg) *arg = i;
        }
    }
    return worst;
}

struct FeasibilityResult {
    double violation = kInf;
    Vec a;
    int iterations = 0;
};

// Per-facet constraint value and subgradient in a:
// g_i(a) = <n_i, x - a> + sqrt(<n_i, a>^2 + b^2 <n_i, y>^2) - c_i.
Vec facet_subgradient(const Vec& n, const Vec& a, const Vec& y, double b) {
    const double na = dot(n, a);
    const double ny = dot(n, y);
    const double s = std::sqrt(na * na + b * b * ny * ny);
    const double coef = (s > 1e-15) ? (na / s - 1.0) : -1.0;
    return coef * n;
}

// Feasibility subproblem for fixed b: minimize the (convex) worst violation
// over the axis vector a, by cutting planes (Kelley) on the facet
// constraints. The LP lower bound certifies infeasibility, the incumbent
// certifies feasibility; either side terminates the bisection probe.
FeasibilityResult min_violation(const Facets& f, const Vec& x, const Vec& y, double b,
                                const std::vector<Vec>& starts, double radius, int iter_cap,
                                double feas_tol) {
    const std::size_t d = x.size();
    const std::size_t nf = f.normals.size();
    struct Cut {
        Vec grad;       // in a
        double rhs;     // grad . a - s <= rhs
    };
    std::vector<Cut> cuts;
    auto add_cuts = [&](const Vec& a, std::size_t top_k) {
        // Cut for each of the top_k most violated facets at a.
        std::vector<std::pair<double, std::size_t>> vio(nf);
        for (std::size_t i = 0; i < nf; ++i) {
            const Vec& n = f.normals[i];
            const double na = dot(n, a);
            const double ny = dot(n, y);
            const double g = dot(n, x) - na + std::sqrt(na * na + b * b * ny * ny) - f.offsets[i];
            vio[i] = {g, i};
        }
        std::sort(vio.begin(), vio.end(),
                  [](const auto& p, const auto& q) { return p.first > q.first; });
        for (std::size_t k = 0; k < std::min(top_k, nf); ++k) {
            const std::size_t i = vio[k].second;
            Vec grad = facet_subgradient(f.normals[i], a, y, b);
            cuts.push_back({grad, dot(grad, a) - vio[k].first});
        }
    };

    FeasibilityResult best;
    for (const Vec& a0 : starts) {
        const double F0 = max_violation(f, x, a0, y, b);
        if (F0 < best.violation) {
            best.violation = F0;
            best.a = a0;
        }
        add_cuts(a0, nf);
    }
    if (best.violation <= feas_tol) return best;

    const int max_rounds = std::max(16, iter_cap / 64);
    for (int round = 0; round < max_rounds; ++round) {
        ++best.iterations;
        // Variables (a, s): minimize s subject to the cuts and |a_k| <= radius.
        const std::size_t m = cuts.size() + 2 * d;
        DenseMatrix A(m, d + 1);
        std::vector<double> rhs(m, 0.0);
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            for (std::size_t j = 0; j < d; ++j) A(i, j) = cuts[i].grad[j];
            A(i, d) = -1.0;
            rhs[i] = cuts[i].rhs;
        }
        for (std::size_t k = 0; k < d; ++k) {
            A(cuts.size() + 2 * k, k) = 1.0;
            rhs[cuts.size() + 2 * k] = radius;
            A(cuts.size() + 2 * k + 1, k) = -1.0;
            rhs[cuts.size() + 2 * k + 1] = radius;
        }
        std::vector<double> c(d + 1, 0.0);
        c[d] = 1.0;
        LPSolution sol = lp_solve(A, rhs, c, LPSense::minimize);
        if (sol.status != LPStatus::optimal)
            throw std::runtime_error("best_ellipse: feasibility LP failed");
        const double lower = sol.objective;
        Vec a(sol.primal.begin(), sol.primal.begin() + d);
        const double F = max_violation(f, x, a, y, b);
        if (F < best.violation) {
            best.violation = F;
            best.a = a;
        }
        if (best.violation <= feas_tol) break;
        if (lower > feas_tol) return best;  // certified infeasible
        if (best.violation - lower < 1e-13 * (1.0 + std::abs(best.violation))) break;
        add_cuts(a, 8);
    }
    return best;
}

std::vector<Vec> axis_starts(const ConvexBody& K, const Vec& x, const Vec& y) {
    std::vector<Vec> starts;
    starts.push_back(Vec(x.size(), 0.0));  // ellipse centered at x
    const Chord ch = ray_chord(K, x, y);
    // Center the ellipse on the midpoint of the chord through x along y.
    starts.push_back((0.5 * (ch.rho_minus - ch.rho_plus)) * y);
    if (auto c = symmetry_center(K)) {
        starts.push_back(x - *c);
    } else if (is_polytope(K)) {
        auto verts = polytope_vertices(K);
        Vec c(x.size(), 0.0);
        for (const auto& v : verts) c = c + v;
        starts.push_back(x - (1.0 / verts.size()) * c);
    }
    return starts;
}

// Dispatch to the closed form when the body admits one.
double ellipse_constant(const ConvexBody& K, const Vec& x, const Vec& y, const Config& cfg) {
    if (std::holds_alternative<StandardSimplex>(K.rep)) return best_ellipse_simplex(x, y);
    return best_ellipse(K, x, y, cfg).E;
}

// Gauge of K - c at z, via the boundary hit of the ray from c through c + z.
double gauge_about(const ConvexBody& K, const Vec& c, const Vec& z) {
    const double zn = norm2(z);
    if (zn < 1e-15) return 0.0;
    const Chord ch = ray_chord(K, c, (1.0 / zn) * z);
    return zn / ch.rho_plus;
}

}  // namespace

Vec InscribedEllipse::point_at(double t) const {
    return std::cos(t) * a + (b * std::sin(t)) * y + (x - a);
}

bool ellipse_in_body(const ConvexBody& K, const InscribedEllipse& e, double tol) {
    if (e.x.size() != K.dim() || e.a.size() != K.dim() || e.y.size() != K.dim())
        throw std::invalid_argument("ellipse_in_body: dimension mismatch");
    if (const auto* ball = std::get_if<Ball>(&K.rep)) {
        // Smooth case: maximize |r(t) - center|^2 over one period.
        auto dist2 = [&](double t) {
            Vec r = e.point_at(t);
            return norm2(r - ball->center);
        };
        double best_t = 0.0, best = -kInf;
        const int cells = 512;
        for (int i = 0; i < cells; ++i) {
            const double t = 2.0 * kPi * i / cells;
            const double v = dist2(t);
            if (v > best) {
                best = v;
                best_t = t;
            }
        }
        const double h = 2.0 * kPi / cells;
        const double t_ref = golden_max(dist2, best_t - h, best_t + h, 60);
        const double r_max = std::sqrt(std::max(best, dist2(t_ref)));
        return r_max <= ball->radius + tol;
    }
    const Facets f = facet_cover(K, 0);
    return max_violation(f, e.x, e.a, e.y, e.b) <= tol;
}

EllipseResult best_ellipse(const ConvexBody& K, const Vec& x, const Vec& y, const Config& cfg) {
    if (x.size() != K.dim() || y.size() != K.dim())
        throw std::invalid_argument("best_ellipse: dimension mismatch");
    if (!is_unit(y, 1e-9)) throw std::invalid_argument("best_ellipse: y must be unit");
    if (!contains(K, x, cfg.contain_tol))
        throw std::invalid_argument("best_ellipse: x must lie in the body");

    const Facets f = facet_cover(K, cfg.support_cuts);
    double scale = std::sqrt(norm2(x));
    for (double c : f.offsets) scale = std::max(scale, std::abs(c));
    const double feas_tol = 1e-10 * (1.0 + scale);

    const double b_hi = 0.5 * maximal_chord(K, y);
    const auto starts = axis_starts(K, x, y);

    EllipseResult res;
    res.ellipse = InscribedEllipse{x, Vec(x.size(), 0.0), y, 0.0};

    auto probe = [&](double b) {
        FeasibilityResult r =
            min_violation(f, x, y, b, starts, 2.0 * (b_hi + scale), cfg.ellipse_iter_cap,
                          feas_tol);
        res.iterations += r.iterations;
        return r;
    };

    double lo = 0.0, hi = b_hi;
    {
        FeasibilityResult top = probe(b_hi);
        if (top.violation <= feas_tol) {
            res.E = b_hi;
            res.ellipse.a = top.a;
            res.ellipse.b = b_hi;
            res.certified = ellipse_in_body(K, res.ellipse, 1e-7 * (1.0 + scale));
            return res;
        }
    }
    Vec best_a(x.size(), 0.0);
    const double tol_b = cfg.ellipse_bisect_rel * b_hi;
    while (hi - lo > tol_b) {
        const double mid = 0.5 * (lo + hi);
        FeasibilityResult r = probe(mid);
        if (r.violation <= feas_tol) {
            lo = mid;
            best_a = r.a;
        } else {
            hi = mid;
        }
    }
    res.E = lo;
    res.ellipse.a = best_a;
    res.ellipse.b = lo;
    res.certified = ellipse_in_body(K, res.ellipse, 1e-7 * (1.0 + scale));
    return res;
}

double best_ellipse_simplex(const Vec& x, const Vec& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("best_ellipse_simplex: dimension mismatch");
    double sx = 0.0, sy = 0.0, q = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0) throw std::invalid_argument("best_ellipse_simplex: x must be interior");
        q += y[i] * y[i] / x[i];
        sx += x[i];
        sy += y[i];
    }
    if (sx >= 1.0) throw std::invalid_argument("best_ellipse_simplex: x must be interior");
    q += sy * sy / (1.0 - sx);
    return 1.0 / std::sqrt(q);
}

double best_ellipse_symmetric(const ConvexBody& K, const Vec& x, const Vec& y) {
    auto c = symmetry_center(K);
    if (!c) throw std::invalid_argument("best_ellipse_symmetric: body has no known center");
    const double px = gauge_about(K, *c, x - *c);
    if (px >= 1.0) throw std::invalid_argument("best_ellipse_symmetric: x must be interior");
    const double py = gauge_about(K, *c, y);
    return std::sqrt(1.0 - px * px) / py;
}

std::pair<double, Vec> worst_direction_E(const ConvexBody& K, const Vec& x, const Config& cfg) {
    const std::size_t d = K.dim();
    if (x.size() != d) throw std::invalid_argument("worst_direction_E: dimension mismatch");
    auto E_dir = [&](const Vec& y) { return ellipse_constant(K, x, y, cfg); };
    if (d == 1) return {E_dir(Vec{1.0}), Vec{1.0}};
    if (d == 2) {
        // E(x, -y) = E(x, y): a half-turn sweep suffices.
        auto E_ang = [&](double th) { return E_dir(Vec{std::cos(th), std::sin(th)}); };
        double best = kInf, best_th = 0.0;
        for (int i = 0; i < cfg.angle_cells; ++i) {
            const double th = kPi * i / cfg.angle_cells;
            const double v = E_ang(th);
            if (v < best) {
                best = v;
                best_th = th;
            }
        }
        const double h = kPi / cfg.angle_cells;
        const double th = golden_max([&](double t) { return -E_ang(t); }, best_th - h,
                                     best_th + h, 48);
        const double v = E_ang(th);
        if (v < best) {
            best = v;
            best_th = th;
        }
        return {best, Vec{std::cos(best_th), std::sin(best_th)}};
    }
    std::vector<Vec> seeds;
    for (std::size_t k = 0; k < d; ++k) {
        Vec e(d, 0.0);
        e[k] = 1.0;
        seeds.push_back(e);
    }
    Vec y = sphere_minimize(d, E_dir, seeds, cfg);
    return {E_dir(y), y};
}

double milev_E(const Vec& x) {
    if (x.size() != 2) throw std::invalid_argument("milev_E: d = 2 only");
    const double x1 = x[0], x2 = x[1], x3 = 1.0 - x1 - x2;
    if (x1 <= 0.0 || x2 <= 0.0 || x3 <= 0.0)
        throw std::invalid_argument("milev_E: x must be interior");
    const double s = x1 * (1.0 - x1) + x2 * (1.0 - x2);
    const double p = x1 * x2 * x3;
    const double D = std::sqrt(s * s - 4.0 * p);
    return std::sqrt((s + D) / (2.0 * p));
}

double bernstein_bound(BernsteinKind kind, int n, const ConvexBody& K, const Vec& x,
                       const Vec& y, const Config& cfg) {
    if (n < 1) throw std::invalid_argument("bernstein_bound: n must be >= 1");
    if (x.size() != K.dim()) throw std::invalid_argument("bernstein_bound: dimension mismatch");
    const bool directional = (kind == BernsteinKind::ellipse || kind == BernsteinKind::kroo_revesz_dir);
    if (directional && !is_unit(y, 1e-9))
        throw std::invalid_argument("bernstein_bound: this kind needs a unit direction y");

    if (kind == BernsteinKind::ellipse) return n / ellipse_constant(K, x, y, cfg);

    const double a = alpha(K, x, cfg).alpha;
    if (a >= 1.0 - 1e-12)
        throw std::domain_error("bernstein_bound: x is on the boundary (alpha = 1)");
    switch (kind) {
        case BernsteinKind::kroo_revesz_dir:
            return 2.0 * n / (maximal_chord(K, y) * std::sqrt(1.0 - a));
        case BernsteinKind::kroo_revesz_grad:
            return 2.0 * n / (minimal_width(K, cfg) * std::sqrt(1.0 - a));
        case BernsteinKind::kroo_revesz_grad_sq:
            return 2.0 * std::sqrt(2.0) * n / (minimal_width(K, cfg) * std::sqrt(1.0 - a * a));
        case BernsteinKind::conjecture:
            return 2.0 * n / (minimal_width(K, cfg) * std::sqrt(1.0 - a * a));
        default:
            throw std::logic_error("bernstein_bound: unreachable");
    }
}

double ridge_constant(const ConvexBody& K, const Vec& x, const Vec& y, const Config& cfg) {
    const std::size_t d = K.dim();
    if (x.size() != d || y.size() != d)
        throw std::invalid_argument("ridge_constant: dimension mismatch");
    if (!is_unit(y, 1e-9)) throw std::invalid_argument("ridge_constant: y must be unit");
    const double a = alpha(K, x, cfg).alpha;
    if (a >= 1.0 - 1e-12)
        throw std::domain_error("ridge_constant: x is on the boundary (alpha = 1)");

    auto objective = [&](const Vec& v) {
        const double vy = dot(v, y);
        if (vy <= 0.0) return -kInf;
        DirectionalFunctional dv{v};
        const double t = t_functional(K, dv, x);
        const double den = 1.0 - t * t;
        if (den <= 1e-15) return -kInf;
        return 2.0 * vy / (width_dir(K, dv) * std::sqrt(den));
    };

    if (d == 1) return std::max(objective(Vec{1.0}), objective(Vec{-1.0}));
    if (d == 2) {
        auto f_ang = [&](double th) { return objective(Vec{std::cos(th), std::sin(th)}); };
        double best = -kInf, best_th = 0.0;
        for (int i = 0; i < 2 * cfg.angle_cells; ++i) {
            const double th = kPi * i / cfg.angle_cells;
            const double v = f_ang(th);
            if (v > best) {
                best = v;
                best_th = th;
            }
        }
        const double h = kPi / cfg.angle_cells;
        const double th = golden_max(f_ang, best_th - h, best_th + h, 48);
        return std::max(best, f_ang(th));
    }
    std::vector<Vec> seeds{normalized(y)};
    for (std::size_t k = 0; k < d; ++k) {
        Vec e(d, 0.0);
        e[k] = 1.0;
        seeds.push_back(e);
        e[k] = -1.0;
        seeds.push_back(e);
    }
    auto neg = [&](const Vec& v) {
        const double o = objective(v);
        return std::isfinite(o) ? -o : kInf;
    };
    Vec v = sphere_minimize(d, neg, seeds, cfg);
    return objective(v);
}

double baran_simplex_V(const Vec& z_re, const Vec& z_im) {
    if (z_re.size() != z_im.size() || z_re.empty())
        throw std::invalid_argument("baran_simplex_V: dimension mismatch");
    double s = 0.0, re_sum = 0.0, im_sum = 0.0;
    for (std::size_t j = 0; j < z_re.size(); ++j) {
        s += std::hypot(z_re[j], z_im[j]);
        re_sum += z_re[j];
        im_sum += z_im[j];
    }
    s += std::hypot(1.0 - re_sum, im_sum);
    // s >= 1 always; V = log(s + sqrt(s^2 - 1)) computed cancellation-free.
    const double sm1 = std::max(0.0, s - 1.0);
    return std::log1p(sm1 + std::sqrt(sm1 * (sm1 + 2.0)));
}

namespace {

// V(x + i eps y) / eps with the "s - 1" accumulated without cancellation:
// sqrt(x^2 + e^2) - x = e^2 / (sqrt(x^2 + e^2) + x) for x > 0.
double baran_slope(const Vec& x, const Vec& y, double eps) {
    double sm1 = 0.0;
    double xs = 0.0, ys = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double e = eps * y[j];
        sm1 += e * e / (std::hypot(x[j], e) + x[j]);
        xs += x[j];
        ys += y[j];
    }
    const double xr = 1.0 - xs;
    const double er = eps * ys;
    sm1 += er * er / (std::hypot(xr, er) + xr);
    const double V = std::log1p(sm1 + std::sqrt(sm1 * (sm1 + 2.0)));
    return V / eps;
}

}  // namespace

NormalDerivative baran_normal_derivative(const Vec& x, const Vec& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("baran_normal_derivative: dimension mismatch");
    double xs = 0.0;
    for (double v : x) {
        if (v <= 0.0)
            throw std::invalid_argument("baran_normal_derivative: x must be interior");
        xs += v;
    }
    if (xs >= 1.0) throw std::invalid_argument("baran_normal_derivative: x must be interior");

    // Geometric epsilon sweep, then Richardson extrapolation in eps^2
    // (the slope has an even error expansion about eps = 0).
    constexpr int kLevels = 7;
    double T[kLevels][kLevels];
    double eps = 1e-3;
    NormalDerivative out;
    std::vector<double> raw(kLevels);
    for (int k = 0; k < kLevels; ++k, eps *= 0.25) {
        raw[k] = baran_slope(x, y, eps);
        T[0][k] = raw[k];
    }
    for (int k = 1; k + 1 < kLevels; ++k)
        if ((raw[k] - raw[k - 1]) * (raw[k + 1] - raw[k]) < 0.0) out.monotone = false;
    double factor = 16.0;  // (1/4)^2 step ratio squared per column
    for (int j = 1; j < kLevels; ++j, factor *= 16.0) {
        for (int k = 0; k + j < kLevels; ++k)
            T[j][k] = (factor * T[j - 1][k + 1] - T[j - 1][k]) / (factor - 1.0);
    }
    out.value = T[kLevels - 1][0];
    out.error = std::abs(T[kLevels - 1][0] - T[kLevels - 2][0]);
    return out;
}

double hypothesis_gap(const Vec& x, const Vec& y) {
    const double D = baran_normal_derivative(x, y).value;
    const double E = best_ellipse_simplex(x, y);
    return std::abs(D * E - 1.0);
}

}  // namespace polyineq
