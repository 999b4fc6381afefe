#include "polyineq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyineq/geometry.hpp"

namespace polyineq {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> monomial_values(const std::vector<std::vector<int>>& exps, const Vec& x) {
    std::vector<double> vals(exps.size(), 1.0);
    for (std::size_t m = 0; m < exps.size(); ++m)
        for (std::size_t j = 0; j < x.size(); ++j)
            for (int e = 0; e < exps[m][j]; ++e) vals[m] *= x[j];
    return vals;
}

[[noreturn]] void oracle_lp_failure(const LPSolution& sol) {
    if (sol.status == LPStatus::unbounded)
        throw std::runtime_error(
            "oracle: LP unbounded; the grid is too coarse for this degree, refine the grid");
    throw std::runtime_error("oracle: LP infeasible (malformed constraint set)");
}

// Dense evaluation set used to locate sup-norm violations between the
// active constraint points. Much finer than the constraint grid; only
// polynomial evaluations happen here, never LP rows.
std::vector<Vec> check_points(const ConvexBody& K, const Config& cfg) {
    const std::size_t d = K.dim();
    const int res = (d == 1) ? 4097 : (d == 2) ? 161 : 21;
    Config fine = cfg;
    fine.boundary_samples = std::max(cfg.boundary_samples, 1024);
    return make_grid(K, res, fine).points;
}

// Solves max c . z over |p(g)| <= 1 for g in pts (plus optional fixed rows),
// then alternates with a separation step: the worst violations of |p| <= 1
// over the check set are appended as new constraint points. Terminates when
// the incumbent polynomial is feasible on the whole check set.
// The first `protect` entries of pts (the base grid) are never dropped;
// appended cut points whose constraints go slack are pruned each round so
// the LP stays near base-grid size instead of accumulating dead rows.
LPSolution refine_solve(const std::vector<std::vector<int>>& exps,
                        const std::vector<double>& objective, const Vec* slice_x,
                        double slice_c, std::vector<Vec>& pts, std::size_t protect,
                        const std::vector<Vec>& check, double feas_tol) {
    const std::size_t M = exps.size();

    // Monomial values on the check set, computed once.
    std::vector<std::vector<double>> check_vals(check.size());
    for (std::size_t g = 0; g < check.size(); ++g) check_vals[g] = monomial_values(exps, check[g]);

    constexpr int kMaxRounds = 60;
    constexpr int kAddPerRound = 8;
    LPSolution sol;
    for (int round = 0; round < kMaxRounds; ++round) {
        const std::size_t G = pts.size();
        const std::size_t extra = slice_x ? 2 : 0;
        DenseMatrix A(2 * G + extra, M);
        std::vector<double> b(2 * G + extra, 0.0);
        for (std::size_t g = 0; g < G; ++g) {
            auto vals = monomial_values(exps, pts[g]);
            for (std::size_t m = 0; m < M; ++m) {
                A(2 * g, m) = vals[m];
                A(2 * g + 1, m) = -vals[m];
            }
            b[2 * g] = 1.0;
            b[2 * g + 1] = 1.0;
        }
        if (slice_x) {
            auto px = monomial_values(exps, *slice_x);
            for (std::size_t m = 0; m < M; ++m) {
                A(2 * G, m) = px[m];
                A(2 * G + 1, m) = -px[m];
            }
            b[2 * G] = slice_c;
            b[2 * G + 1] = -slice_c;
        }
        sol = lp_solve_wide(A, b, objective, LPSense::maximize);
        if (sol.status != LPStatus::optimal) oracle_lp_failure(sol);

        // Separation: worst |p| > 1 points over the check set.
        std::vector<std::pair<double, std::size_t>> vio;
        for (std::size_t g = 0; g < check.size(); ++g) {
            double v = 0.0;
            for (std::size_t m = 0; m < M; ++m) v += sol.primal[m] * check_vals[g][m];
            const double excess = std::abs(v) - 1.0;
            if (excess > feas_tol) vio.push_back({excess, g});
        }
        if (vio.empty()) return sol;
        std::sort(vio.begin(), vio.end(),
                  [](const auto& p, const auto& q) { return p.first > q.first; });

        // Drop slack cuts (constraints inactive at the incumbent) before
        // adding new ones; a dropped point gets re-separated if it matters.
        std::size_t keep = std::min(protect, pts.size());
        for (std::size_t g = keep; g < pts.size(); ++g) {
            auto vals = monomial_values(exps, pts[g]);
            double v = 0.0;
            for (std::size_t m = 0; m < M; ++m) v += sol.primal[m] * vals[m];
            if (std::abs(v) >= 0.9) pts[keep++] = pts[g];
        }
        pts.resize(keep);

        for (std::size_t k = 0; k < std::min<std::size_t>(kAddPerRound, vio.size()); ++k)
            pts.push_back(check[vio[k].second]);
    }
    return sol;  // refinement budget exhausted: still a valid upper bound
}

}  // namespace

GridSpec make_grid(const ConvexBody& K, int resolution, const Config& cfg) {
    if (resolution < 2) throw std::invalid_argument("make_grid: resolution must be >= 2");
    const std::size_t d = K.dim();
    GridSpec grid;
    grid.body = std::make_shared<ConvexBody>(K);
    grid.resolution = resolution;

    Vec lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
        Vec e(d, 0.0);
        e[k] = 1.0;
        hi[k] = support(K, e);
        lo[k] = -support(K, -e);
    }

    // Axis-aligned lattice intersected with the body.
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
        Vec p(d);
        for (std::size_t k = 0; k < d; ++k)
            p[k] = lo[k] + (hi[k] - lo[k]) * idx[k] / (resolution - 1);
        if (contains(K, p, 1e-12)) grid.points.push_back(p);
        std::size_t k = 0;
        while (k < d && ++idx[k] == static_cast<std::size_t>(resolution)) idx[k++] = 0;
        if (k == d) break;
    }

    if (is_polytope(K)) {
        auto verts = polytope_vertices(K);
        for (const auto& v : verts) grid.points.push_back(v);
        if (d == 2) {
            auto hull = (verts.size() > 2) ? hull2d(verts) : verts;
            for (std::size_t i = 0; i < hull.size(); ++i) {
                const Vec& a = hull[i];
                const Vec& b = hull[(i + 1) % hull.size()];
                for (int s = 1; s < cfg.boundary_samples; ++s) {
                    double t = static_cast<double>(s) / cfg.boundary_samples;
                    grid.points.push_back((1.0 - t) * a + t * b);
                }
            }
        }
        if (d == 1) {
            grid.points.push_back(Vec{lo[0]});
            grid.points.push_back(Vec{hi[0]});
        }
    } else if (const auto* ball = std::get_if<Ball>(&K.rep); ball && d == 2) {
        const int nb = 4 * cfg.boundary_samples;
        for (int i = 0; i < nb; ++i) {
            double th = 2.0 * kPi * i / nb;
            grid.points.push_back(ball->center +
                                  ball->radius * Vec{std::cos(th), std::sin(th)});
        }
    }
    return grid;
}

std::pair<double, MultiPoly> chebyshev_oracle(const ConvexBody& K, const Vec& x, int n,
                                              const GridSpec& grid, const Config& cfg) {
    if (x.size() != K.dim()) throw std::invalid_argument("chebyshev_oracle: dimension mismatch");
    const auto exps = monomial_exponents(static_cast<int>(K.dim()), n);
    std::vector<Vec> pts = grid.points;
    const auto check = check_points(K, cfg);
    std::vector<double> c = monomial_values(exps, x);
    auto sol = refine_solve(exps, c, nullptr, 0.0, pts, grid.points.size(), check, 1e-6);
    MultiPoly p{static_cast<int>(K.dim()), n, sol.primal};
    return {sol.objective, p};
}

double leading_growth_oracle(const ConvexBody& K, const Vec& v, int n, const GridSpec& grid,
                             const Config& cfg) {
    if (norm2(v) == 0.0) throw std::invalid_argument("leading_growth_oracle: zero direction");
    const auto exps = monomial_exponents(static_cast<int>(K.dim()), n);
    const std::size_t M = exps.size();
    std::vector<Vec> pts = grid.points;
    const auto check = check_points(K, cfg);
    // Objective: value of the degree-n homogeneous part at v.
    std::vector<double> c(M, 0.0);
    auto vals = monomial_values(exps, v);
    for (std::size_t m = 0; m < M; ++m) {
        int total = 0;
        for (int e : exps[m]) total += e;
        if (total == n) c[m] = vals[m];
    }
    auto sol = refine_solve(exps, c, nullptr, 0.0, pts, grid.points.size(), check, 1e-6);
    return sol.objective;
}

double bernstein_oracle(const ConvexBody& K, const Vec& x, const Vec& y, int n,
                        const GridSpec& grid, int c_sweep, const Config& cfg) {
    if (x.size() != K.dim() || y.size() != K.dim())
        throw std::invalid_argument("bernstein_oracle: dimension mismatch");
    if (!is_unit(y, 1e-9)) throw std::invalid_argument("bernstein_oracle: y must be unit");
    if (c_sweep < 9) throw std::invalid_argument("bernstein_oracle: c_sweep must be >= 9");
    const int d = static_cast<int>(K.dim());
    const auto exps = monomial_exponents(d, n);
    const std::size_t M = exps.size();

    // Gradient objective: coefficient of z_m is <grad of monomial m at x, y>.
    std::vector<double> c(M, 0.0);
    for (std::size_t m = 0; m < M; ++m) {
        MultiPoly mono{d, n, std::vector<double>(M, 0.0)};
        mono.coeffs[m] = 1.0;
        c[m] = dot(mono.gradient(x), y);
    }

    std::vector<Vec> pts = grid.points;
    const auto check = check_points(K, cfg);

    // Chebyshev-spaced slice values concentrated near |c| -> 1. The refined
    // constraint points accumulate across slices (pure tightening).
    const double theta_max = std::asin(1.0 - cfg.c_margin);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < c_sweep; ++i) {
        const double theta = -theta_max + 2.0 * theta_max * i / (c_sweep - 1);
        const double cv = std::sin(theta);
        // Sup-norm slack epsilon inflates the slice value by roughly
        // epsilon / (1 - c^2), so the separation tolerance shrinks with the
        // slice: this keeps the relative overshoot uniformly ~0.2%.
        const double feas_tol = std::max(1e-9, 2e-3 * (1.0 - cv * cv));
        auto sol = refine_solve(exps, c, &x, cv, pts, grid.points.size(), check, feas_tol);
        best = std::max(best, sol.objective / std::sqrt(1.0 - cv * cv));
    }
    return best;
}

}  // namespace polyineq
