#include "polyineq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "polyineq/lp.hpp"

namespace polyineq {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec angle_dir(double theta) { return Vec{std::cos(theta), std::sin(theta)}; }

// A maximizer point of <v, .> over K; any element of the subdifferential of h.
Vec support_point(const ConvexBody& K, const Vec& v) {
    return std::visit(
        [&](const auto& body) -> Vec {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, HPolytope>) {
                const std::size_t d = v.size();
                DenseMatrix A(body.normals.size(), d);
                for (std::size_t i = 0; i < body.normals.size(); ++i)
                    for (std::size_t j = 0; j < d; ++j) A(i, j) = body.normals[i][j];
                auto sol = lp_solve(A, body.offsets, v, LPSense::maximize);
                if (sol.status != LPStatus::optimal)
                    throw std::runtime_error("support: LP failed on malformed H-polytope");
                return sol.primal;
            } else if constexpr (std::is_same_v<T, VPolytope>) {
                const Vec* best = &body.vertices[0];
                double hv = dot(v, *best);
                for (const auto& p : body.vertices) {
                    double s = dot(v, p);
                    if (s > hv) { hv = s; best = &p; }
                }
                return *best;
            } else if constexpr (std::is_same_v<T, Ball>) {
                return body.center + (body.radius / norm2(v)) * v;
            } else if constexpr (std::is_same_v<T, Box>) {
                Vec p(v.size());
                for (std::size_t i = 0; i < v.size(); ++i)
                    p[i] = v[i] > 0 ? body.upper[i]
                         : v[i] < 0 ? body.lower[i]
                                    : 0.5 * (body.lower[i] + body.upper[i]);
                return p;
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                std::size_t best = 0;
                for (std::size_t i = 1; i < v.size(); ++i)
                    if (v[i] > v[best]) best = i;
                Vec p(v.size(), 0.0);
                if (v[best] > 0) p[best] = 1.0;
                return p;
            } else {
                Vec plus = support_point(*body.inner, v);
                Vec minus = support_point(*body.inner, -v);
                return 0.5 * (plus - minus);
            }
        },
        K.rep);
}

struct TEval {
    double t;
    double hp, hm, w;
};

TEval eval_t(const ConvexBody& K, const Vec& v, const Vec& x) {
    const double hp = support(K, v);
    const double hm = support(K, -v);
    const double w = hp + hm;
    if (w <= 0) throw std::runtime_error("t_functional: degenerate width");
    return TEval{(2.0 * dot(v, x) - hp + hm) / w, hp, hm, w};
}

// Golden-section maximization of f over [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b, double tol,
                  double& arg) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    arg = 0.5 * (a + b);
    return f(arg);
}

std::vector<Vec> candidate_directions(const ConvexBody& K) {
    std::vector<Vec> dirs;
    auto push = [&](const Vec& v) {
        double n = norm2(v);
        if (n > 1e-12) dirs.push_back((1.0 / n) * v);
    };
    try {
        HPolytope P = to_hrep(K);
        for (const auto& n : P.normals) push(n);
    } catch (const std::invalid_argument&) {
    }
    if (K.dim() == 2 && is_polytope(K)) {
        try {
            auto verts = polytope_vertices(K);
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j) push(verts[i] - verts[j]);
        } catch (const std::invalid_argument&) {
        }
    }
    return dirs;
}

std::vector<Vec> sphere_seeds(std::size_t dim, int count, std::uint64_t seed) {
    std::vector<Vec> out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (out.size() < static_cast<std::size_t>(count)) {
        Vec v(dim);
        for (auto& c : v) c = gauss(rng);
        double n = norm2(v);
        if (n > 1e-8) out.push_back((1.0 / n) * v);
    }
    return out;
}

// Chord with clamping: boundary points give a zero arm instead of an error.
Chord chord_clamped(const ConvexBody& K, const Vec& x, const Vec& u, double tol) {
    if (std::holds_alternative<Ball>(K.rep)) {
        const auto& ball = std::get<Ball>(K.rep);
        const Vec p = x - ball.center;
        const double pu = dot(p, u);
        double disc = pu * pu - (dot(p, p) - ball.radius * ball.radius);
        if (disc < 0) disc = 0;
        const double s = std::sqrt(disc);
        return Chord{std::max(s + pu, 0.0), std::max(s - pu, 0.0)};
    }
    try {
        HPolytope P = to_hrep(K);
        double plus = std::numeric_limits<double>::infinity();
        double minus = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < P.normals.size(); ++i) {
            const double slack = P.offsets[i] - dot(P.normals[i], x);
            const double du = dot(P.normals[i], u);
            if (du > 1e-14) plus = std::min(plus, slack / du);
            if (du < -1e-14) minus = std::min(minus, slack / (-du));
        }
        return Chord{std::max(minus, 0.0), std::max(plus, 0.0)};
    } catch (const std::invalid_argument&) {
        Chord ch = ray_chord(K, x, u);
        (void)tol;
        return ch;
    }
}

}  // namespace

double support(const ConvexBody& K, const Vec& v) {
    if (v.size() != K.dim()) throw std::invalid_argument("support: dimension mismatch");
    if (norm2(v) == 0.0) throw std::invalid_argument("support: zero direction");
    return std::visit(
        [&](const auto& body) -> double {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, HPolytope>) {
                return dot(v, support_point(K, v));
            } else if constexpr (std::is_same_v<T, VPolytope>) {
                double h = dot(v, body.vertices[0]);
                for (const auto& p : body.vertices) h = std::max(h, dot(v, p));
                return h;
            } else if constexpr (std::is_same_v<T, Ball>) {
                return dot(v, body.center) + body.radius * norm2(v);
            } else if constexpr (std::is_same_v<T, Box>) {
                double h = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i)
                    h += std::max(v[i] * body.lower[i], v[i] * body.upper[i]);
                return h;
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                double m = 0.0;
                for (double c : v) m = std::max(m, c);
                return m;
            } else {
                return 0.5 * (support(*body.inner, v) + support(*body.inner, -v));
            }
        },
        K.rep);
}

double width_dir(const ConvexBody& K, const DirectionalFunctional& v) {
    return support(K, v.v) + support(K, -v.v);
}

double maximal_chord(const ConvexBody& K, const Vec& v) {
    if (v.size() != K.dim()) throw std::invalid_argument("maximal_chord: dimension mismatch");
    if (norm2(v) == 0.0) throw std::invalid_argument("maximal_chord: zero direction");
    return std::visit(
        [&](const auto& body) -> double {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return 2.0 * body.radius / norm2(v);
            } else if constexpr (std::is_same_v<T, Box>) {
                double lam = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] != 0.0)
                        lam = std::min(lam, 0.5 * (body.upper[i] - body.lower[i]) / std::abs(v[i]));
                return 2.0 * lam;
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                // lambda v lies in Delta - Delta iff both the positive and the
                // negative part sums stay below 1.
                double pos = 0.0, neg = 0.0;
                for (double c : v) (c > 0 ? pos : neg) += std::abs(c);
                double lam = std::numeric_limits<double>::infinity();
                if (pos > 0) lam = std::min(lam, 1.0 / pos);
                if (neg > 0) lam = std::min(lam, 1.0 / neg);
                return lam;
            } else if constexpr (std::is_same_v<T, SymmetrizedSupport>) {
                return maximal_chord(*body.inner, v);
            } else if constexpr (std::is_same_v<T, HPolytope>) {
                // max lambda s.t. lambda v = p - q with p, q in K.
                const std::size_t d = v.size();
                const std::size_t m = body.normals.size();
                DenseMatrix A(2 * m + 2 * d, 1 + 2 * d);
                std::vector<double> b(2 * m + 2 * d, 0.0);
                for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = 0; j < d; ++j) {
                        A(i, 1 + j) = body.normals[i][j];
                        A(m + i, 1 + d + j) = body.normals[i][j];
                    }
                    b[i] = body.offsets[i];
                    b[m + i] = body.offsets[i];
                }
                for (std::size_t k = 0; k < d; ++k) {
                    // lambda v_k - p_k + q_k = 0 as two inequalities
                    A(2 * m + 2 * k, 0) = v[k];
                    A(2 * m + 2 * k, 1 + k) = -1.0;
                    A(2 * m + 2 * k, 1 + d + k) = 1.0;
                    A(2 * m + 2 * k + 1, 0) = -v[k];
                    A(2 * m + 2 * k + 1, 1 + k) = 1.0;
                    A(2 * m + 2 * k + 1, 1 + d + k) = -1.0;
                }
                std::vector<double> c(1 + 2 * d, 0.0);
                c[0] = 1.0;
                auto sol = lp_solve(A, b, c, LPSense::maximize);
                if (sol.status != LPStatus::optimal)
                    throw std::runtime_error("maximal_chord: LP failed");
                return sol.objective;
            } else {  // VPolytope: convex-combination weights for p and q
                const auto& verts = body.vertices;
                const std::size_t d = v.size();
                const std::size_t n = verts.size();
                // variables: lambda, mu_1..mu_n, nu_1..nu_n
                DenseMatrix A(2 * d + 4 + 2 * n, 1 + 2 * n);
                std::vector<double> b(2 * d + 4 + 2 * n, 0.0);
                for (std::size_t k = 0; k < d; ++k) {
                    A(2 * k, 0) = v[k];
                    A(2 * k + 1, 0) = -v[k];
                    for (std::size_t i = 0; i < n; ++i) {
                        A(2 * k, 1 + i) = -verts[i][k];
                        A(2 * k, 1 + n + i) = verts[i][k];
                        A(2 * k + 1, 1 + i) = verts[i][k];
                        A(2 * k + 1, 1 + n + i) = -verts[i][k];
                    }
                }
                for (std::size_t i = 0; i < n; ++i) {
                    A(2 * d, 1 + i) = 1.0;
                    A(2 * d + 1, 1 + i) = -1.0;
                    A(2 * d + 2, 1 + n + i) = 1.0;
                    A(2 * d + 3, 1 + n + i) = -1.0;
                }
                b[2 * d] = 1.0;
                b[2 * d + 1] = -1.0;
                b[2 * d + 2] = 1.0;
                b[2 * d + 3] = -1.0;
                for (std::size_t i = 0; i < 2 * n; ++i) A(2 * d + 4 + i, 1 + i) = -1.0;
                std::vector<double> c(1 + 2 * n, 0.0);
                c[0] = 1.0;
                auto sol = lp_solve(A, b, c, LPSense::maximize);
                if (sol.status != LPStatus::optimal)
                    throw std::runtime_error("maximal_chord: LP failed");
                return sol.objective;
            }
        },
        K.rep);
}

double minimal_width(const ConvexBody& K, const Config& cfg) {
    const std::size_t d = K.dim();
    if (const auto* ball = std::get_if<Ball>(&K.rep)) return 2.0 * ball->radius;
    if (const auto* box = std::get_if<Box>(&K.rep)) {
        double w = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < d; ++i) w = std::min(w, box->upper[i] - box->lower[i]);
        return w;
    }
    if (d == 1) return width_dir(K, DirectionalFunctional{Vec{1.0}});
    if (d == 2 && is_polytope(K)) {
        // Exact: the minimum is attained at an edge normal of C(K).
        ConvexBody C = central_symmetrization(K);
        auto hull = polytope_vertices(C);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Vec& a = hull[i];
            const Vec& b = hull[(i + 1) % hull.size()];
            Vec n = normalized(Vec{b[1] - a[1], a[0] - b[0]});
            best = std::min(best, width_dir(K, DirectionalFunctional{n}));
        }
        return best;
    }
    Vec v = sphere_minimize(
        d, [&](const Vec& u) { return support(K, u) + support(K, -u); }, candidate_directions(K),
        cfg);
    return width_dir(K, DirectionalFunctional{v});
}

double gauge(const ConvexBody& K, const Vec& x) {
    if (x.size() != K.dim()) throw std::invalid_argument("gauge: dimension mismatch");
    if (const auto* ball = std::get_if<Ball>(&K.rep)) {
        const double a = dot(ball->center, ball->center) - ball->radius * ball->radius;
        if (a >= 0) throw std::invalid_argument("gauge: origin not interior");
        const double xc = dot(x, ball->center);
        const double xx = dot(x, x);
        if (xx == 0.0) return 0.0;
        return (xc - std::sqrt(xc * xc - a * xx)) / a;
    }
    try {
        HPolytope P = to_hrep(K);
        double phi = 0.0;
        for (std::size_t i = 0; i < P.normals.size(); ++i) {
            if (P.offsets[i] <= 1e-12) throw std::invalid_argument("gauge: origin not interior");
            phi = std::max(phi, dot(P.normals[i], x) / P.offsets[i]);
        }
        return phi;
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).find("origin") != std::string::npos) throw;
    }
    // No exact H-representation: bisection on membership of x / lambda.
    if (!contains(K, Vec(x.size(), 0.0), -1e-12) && !contains(K, Vec(x.size(), 0.0), 1e-12))
        throw std::invalid_argument("gauge: origin not interior");
    if (norm2(x) == 0.0) return 0.0;
    double hi = 1.0;
    while (!contains(K, (1.0 / hi) * x, 1e-12) && hi < 1e12) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid > 0 && contains(K, (1.0 / mid) * x, 1e-12))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double t_functional(const ConvexBody& K, const DirectionalFunctional& v, const Vec& x) {
    if (x.size() != K.dim()) throw std::invalid_argument("t_functional: dimension mismatch");
    return eval_t(K, v.v, x).t;
}

AlphaResult alpha(const ConvexBody& K, const Vec& x, const Config& cfg) {
    const std::size_t d = K.dim();
    if (x.size() != d) throw std::invalid_argument("alpha: dimension mismatch");

    // Closed form: standard triangle, strictly interior point.
    if (const auto* simplex = std::get_if<StandardSimplex>(&K.rep); simplex && simplex->dim == 2) {
        const double r3 = 1.0 - x[0] - x[1];
        if (x[0] > 0 && x[1] > 0 && r3 > 0) {
            double r = std::min({x[0], x[1], r3});
            Vec w;
            if (r == x[0]) w = Vec{-1.0, 0.0};
            else if (r == x[1]) w = Vec{0.0, -1.0};
            else w = Vec{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
            return AlphaResult{1.0 - 2.0 * r, DirectionalFunctional{w}, AlphaMethod::closed_form};
        }
    }
    // Closed form: centrally symmetric variants, alpha = gauge about the center.
    if (auto c = symmetry_center(K); c && !std::holds_alternative<SymmetrizedSupport>(K.rep)) {
        Vec xc = x - *c;
        Vec w;
        double a = 0.0;
        if (const auto* ball = std::get_if<Ball>(&K.rep)) {
            a = norm2(xc) / ball->radius;
            w = a > 0 ? normalized(xc) : Vec([&] { Vec e(d, 0.0); e[0] = 1.0; return e; }());
        } else {
            const auto& box = std::get<Box>(K.rep);
            std::size_t best = 0;
            double bestr = -1.0;
            for (std::size_t i = 0; i < d; ++i) {
                double s = 0.5 * (box.upper[i] - box.lower[i]);
                double ratio = std::abs(xc[i]) / s;
                if (ratio > bestr) { bestr = ratio; best = i; }
            }
            a = bestr;
            w = Vec(d, 0.0);
            w[best] = xc[best] >= 0 ? 1.0 : -1.0;
        }
        return AlphaResult{a, DirectionalFunctional{w}, AlphaMethod::closed_form};
    }

    if (d == 1) {
        const double t = eval_t(K, Vec{1.0}, x).t;
        Vec w{t >= 0 ? 1.0 : -1.0};
        return AlphaResult{std::abs(t), DirectionalFunctional{w}, AlphaMethod::sphere_opt};
    }

    if (d == 2) {
        auto f = [&](double theta) { return eval_t(K, angle_dir(theta), x).t; };
        double best_theta = 0.0, best = -std::numeric_limits<double>::infinity();
        const double step = 2.0 * kPi / cfg.angle_cells;
        for (int i = 0; i < cfg.angle_cells; ++i) {
            double th = i * step;
            double val = f(th);
            if (val > best) { best = val; best_theta = th; }
        }
        for (const auto& dir : candidate_directions(K)) {
            for (double s : {1.0, -1.0}) {
                double th = std::atan2(s * dir[1], s * dir[0]);
                double val = f(th);
                if (val > best) { best = val; best_theta = th; }
            }
        }
        double arg = best_theta;
        double refined = golden_max(f, best_theta - step, best_theta + step, 1e-12, arg);
        if (refined < best) { refined = best; arg = best_theta; }
        return AlphaResult{refined, DirectionalFunctional{normalized(angle_dir(arg))},
                           AlphaMethod::sphere_opt};
    }

    // d >= 3: multi-start projected subgradient ascent on the sphere.
    auto starts = candidate_directions(K);
    for (const auto& s : sphere_seeds(d, cfg.multistart, cfg.seed)) starts.push_back(s);
    double best = -std::numeric_limits<double>::infinity();
    Vec best_v;
    bool converged = false;
    for (const auto& start : starts) {
        Vec v = start;
        TEval te = eval_t(K, v, x);
        double step = 0.5;
        bool local_conv = false;
        for (int it = 0; it < cfg.sphere_iter_cap; ++it) {
            const Vec pp = support_point(K, v);
            const Vec pm = support_point(K, -v);
            // grad of N = 2<v,x> - h(v) + h(-v) and of D = h(v) + h(-v)
            const Vec gN = 2.0 * x - pp - pm;
            const Vec gD = pp - pm;
            Vec g = (1.0 / te.w) * gN - (te.t / te.w) * gD;
            // project onto tangent space of the sphere
            g = g - dot(g, v) * v;
            if (norm2(g) < 1e-14) { local_conv = true; break; }
            bool improved = false;
            while (step > 1e-14) {
                Vec vn = normalized(v + step * g);
                TEval tn = eval_t(K, vn, x);
                if (tn.t > te.t + cfg.sphere_tol * 0.01) {
                    double gain = tn.t - te.t;
                    v = vn;
                    te = tn;
                    improved = true;
                    if (gain < cfg.sphere_tol) { local_conv = true; }
                    break;
                }
                step *= 0.5;
            }
            if (!improved || local_conv) {
                local_conv = true;
                break;
            }
        }
        if (te.t > best) {
            best = te.t;
            best_v = v;
            converged = local_conv;
        }
    }
    AlphaResult res{best, DirectionalFunctional{best_v}, AlphaMethod::sphere_opt};
    res.converged = converged;
    return res;
}

double gamma_functional(const ConvexBody& K, const Vec& x, const Config& cfg) {
    const std::size_t d = K.dim();
    if (x.size() != d) throw std::invalid_argument("gamma: dimension mismatch");
    if (!contains(K, x, cfg.contain_tol))
        throw std::invalid_argument("gamma: point not interior");
    auto ratio = [&](const Vec& u) {
        Chord ch = chord_clamped(K, x, u, cfg.contain_tol);
        const double s = ch.rho_minus + ch.rho_plus;
        if (s <= 0) return 0.0;
        return 2.0 * std::sqrt(ch.rho_minus * ch.rho_plus) / s;
    };
    if (d == 1) return ratio(Vec{1.0});
    if (d == 2) {
        double best = std::numeric_limits<double>::infinity();
        double best_theta = 0.0;
        const double step = kPi / cfg.angle_cells;
        for (int i = 0; i < cfg.angle_cells; ++i) {
            double th = i * step;
            double val = ratio(angle_dir(th));
            if (val < best) { best = val; best_theta = th; }
        }
        double arg;
        double refined = golden_max([&](double th) { return -ratio(angle_dir(th)); },
                                    best_theta - step, best_theta + step, 1e-12, arg);
        return std::min(best, -refined);
    }
    Vec u = sphere_minimize(d, ratio, candidate_directions(K), cfg);
    return ratio(u);
}

bool in_Klambda(const ConvexBody& K, const Vec& x, double lam, const Config& cfg) {
    if (lam < 0) throw std::invalid_argument("in_Klambda: lambda must be >= 0");
    return alpha(K, x, cfg).alpha <= lam;
}

Vec sphere_minimize(std::size_t dim, const std::function<double(const Vec&)>& f,
                    const std::vector<Vec>& extra_starts, const Config& cfg) {
    std::vector<Vec> starts = extra_starts;
    for (const auto& s : sphere_seeds(dim, cfg.multistart, cfg.seed ^ 0x9e3779b97f4a7c15ull))
        starts.push_back(s);
    if (starts.empty()) throw std::invalid_argument("sphere_minimize: no starts");

    double best = std::numeric_limits<double>::infinity();
    Vec best_v;
    const double h = 1e-6;
    for (const auto& start : starts) {
        Vec v = normalized(start);
        double fv = f(v);
        double step = 0.25;
        for (int it = 0; it < cfg.sphere_iter_cap; ++it) {
            // finite-difference gradient projected onto the tangent space
            Vec g(dim, 0.0);
            for (std::size_t k = 0; k < dim; ++k) {
                Vec e(dim, 0.0);
                e[k] = h;
                g[k] = (f(normalized(v + e)) - f(normalized(v - e))) / (2.0 * h);
            }
            g = g - dot(g, v) * v;
            if (norm2(g) < 1e-12) break;
            bool improved = false;
            while (step > 1e-13) {
                Vec vn = normalized(v - step * g);
                double fn = f(vn);
                if (fn < fv - 1e-15) {
                    improved = fv - fn > cfg.sphere_tol;
                    v = vn;
                    fv = fn;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        if (fv < best) {
            best = fv;
            best_v = v;
        }
    }
    return best_v;
}

}  // namespace polyineq
