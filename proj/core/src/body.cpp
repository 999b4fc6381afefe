#include "polyineq/body.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyineq/lp.hpp"

namespace polyineq {

namespace {

std::size_t affine_rank(const std::vector<Vec>& pts) {
    if (pts.empty()) return 0;
    const std::size_t d = pts[0].size();
    std::vector<Vec> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (std::abs(rows[i][col]) > std::abs(rows[piv][col])) piv = i;
        if (std::abs(rows[piv][col]) < 1e-12) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank) continue;
            double f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < d; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Feasibility LP: is x a convex combination of the given points within tol?
bool in_hull_lp(const std::vector<Vec>& pts, const Vec& x, double tol) {
    const std::size_t n = pts.size();
    const std::size_t d = x.size();
    DenseMatrix A(2 * d + 2 + n, n);
    std::vector<double> b(2 * d + 2 + n, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            A(2 * k, i) = pts[i][k];
            A(2 * k + 1, i) = -pts[i][k];
        }
        b[2 * k] = x[k] + tol;
        b[2 * k + 1] = -x[k] + tol;
    }
    for (std::size_t i = 0; i < n; ++i) {
        A(2 * d, i) = 1.0;
        A(2 * d + 1, i) = -1.0;
    }
    b[2 * d] = 1.0;
    b[2 * d + 1] = -1.0;
    for (std::size_t i = 0; i < n; ++i) A(2 * d + 2 + i, i) = -1.0;
    std::vector<double> c(n, 0.0);
    return lp_solve(A, b, c, LPSense::maximize).status == LPStatus::optimal;
}

Chord hrep_chord(const HPolytope& P, const Vec& x, const Vec& u) {
    double plus = std::numeric_limits<double>::infinity();
    double minus = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < P.normals.size(); ++i) {
        const double slack = P.offsets[i] - dot(P.normals[i], x);
        const double du = dot(P.normals[i], u);
        if (du > 1e-14) plus = std::min(plus, slack / du);
        if (du < -1e-14) minus = std::min(minus, slack / (-du));
    }
    if (!std::isfinite(plus) || !std::isfinite(minus))
        throw std::runtime_error("ray_chord: unbounded ray (malformed body)");
    return Chord{minus, plus};
}

}  // namespace

std::size_t ConvexBody::dim() const {
    return std::visit(
        [](const auto& v) -> std::size_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HPolytope>) return v.normals.at(0).size();
            else if constexpr (std::is_same_v<T, VPolytope>) return v.vertices.at(0).size();
            else if constexpr (std::is_same_v<T, Ball>) return v.center.size();
            else if constexpr (std::is_same_v<T, Box>) return v.lower.size();
            else if constexpr (std::is_same_v<T, StandardSimplex>) return static_cast<std::size_t>(v.dim);
            else return v.inner->dim();
        },
        rep);
}

ConvexBody make_hpolytope(std::vector<Vec> normals, std::vector<double> offsets) {
    if (normals.empty() || normals.size() != offsets.size())
        throw std::invalid_argument("hpolytope: need matching normals and offsets");
    const std::size_t d = normals[0].size();
    if (d < 1) throw std::invalid_argument("hpolytope: dimension must be >= 1");
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].size() != d) throw std::invalid_argument("hpolytope: mixed dimensions");
        if (!all_finite(normals[i]) || !std::isfinite(offsets[i]))
            throw std::invalid_argument("hpolytope: non-finite entry");
        const double n = norm2(normals[i]);
        if (n < 1e-14) throw std::invalid_argument("hpolytope: zero normal");
        normals[i] = (1.0 / n) * normals[i];
        offsets[i] /= n;
    }
    HPolytope P{normals, offsets};

    // Bounded iff the support in every +-axis direction is finite.
    for (std::size_t k = 0; k < d; ++k) {
        for (double s : {1.0, -1.0}) {
            DenseMatrix A(P.normals.size(), d);
            std::vector<double> b = P.offsets;
            for (std::size_t i = 0; i < P.normals.size(); ++i)
                for (std::size_t j = 0; j < d; ++j) A(i, j) = P.normals[i][j];
            std::vector<double> c(d, 0.0);
            c[k] = s;
            auto sol = lp_solve(A, b, c, LPSense::maximize);
            if (sol.status == LPStatus::unbounded)
                throw std::invalid_argument("hpolytope: unbounded");
            if (sol.status == LPStatus::infeasible)
                throw std::invalid_argument("hpolytope: empty");
        }
    }
    // Interior point: max r with n_i . x + r <= c_i must be positive.
    {
        DenseMatrix A(P.normals.size(), d + 1);
        for (std::size_t i = 0; i < P.normals.size(); ++i) {
            for (std::size_t j = 0; j < d; ++j) A(i, j) = P.normals[i][j];
            A(i, d) = 1.0;
        }
        std::vector<double> c(d + 1, 0.0);
        c[d] = 1.0;
        auto sol = lp_solve(A, P.offsets, c, LPSense::maximize);
        if (sol.status != LPStatus::optimal || sol.objective <= 1e-10)
            throw std::invalid_argument("hpolytope: empty interior");
    }
    return ConvexBody{std::move(P)};
}

ConvexBody make_vpolytope(std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("vpolytope: no vertices");
    const std::size_t d = vertices[0].size();
    for (const auto& v : vertices) {
        if (v.size() != d) throw std::invalid_argument("vpolytope: mixed dimensions");
        if (!all_finite(v)) throw std::invalid_argument("vpolytope: non-finite vertex");
    }
    if (affine_rank(vertices) != d)
        throw std::invalid_argument("vpolytope: vertices do not affinely span the space");
    return ConvexBody{VPolytope{std::move(vertices)}};
}

ConvexBody make_ball(Vec center, double radius) {
    if (center.empty() || !all_finite(center)) throw std::invalid_argument("ball: bad center");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("ball: radius must be positive");
    return ConvexBody{Ball{std::move(center), radius}};
}

ConvexBody make_box(Vec lower, Vec upper) {
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("box: bad bounds");
    if (!all_finite(lower) || !all_finite(upper))
        throw std::invalid_argument("box: non-finite bound");
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i])) throw std::invalid_argument("box: lower must be < upper");
    return ConvexBody{Box{std::move(lower), std::move(upper)}};
}

ConvexBody make_simplex(int dim) {
    if (dim < 1) throw std::invalid_argument("simplex: dimension must be >= 1");
    return ConvexBody{StandardSimplex{dim}};
}

bool contains(const ConvexBody& K, const Vec& x, double tol) {
    if (x.size() != K.dim()) throw std::invalid_argument("contains: dimension mismatch");
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HPolytope>) {
                for (std::size_t i = 0; i < v.normals.size(); ++i)
                    if (dot(v.normals[i], x) > v.offsets[i] + tol) return false;
                return true;
            } else if constexpr (std::is_same_v<T, VPolytope>) {
                return in_hull_lp(v.vertices, x, tol);
            } else if constexpr (std::is_same_v<T, Ball>) {
                return norm2(x - v.center) <= v.radius + tol;
            } else if constexpr (std::is_same_v<T, Box>) {
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (x[i] < v.lower[i] - tol || x[i] > v.upper[i] + tol) return false;
                return true;
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                double s = 0.0;
                for (double xi : x) {
                    if (xi < -tol) return false;
                    s += xi;
                }
                return s <= 1.0 + tol;
            } else {
                throw std::invalid_argument(
                    "contains: membership unsupported for support-backed symmetrization");
            }
        },
        K.rep);
}

Chord ray_chord(const ConvexBody& K, const Vec& x, const Vec& u) {
    if (!is_unit(u, 1e-9)) throw std::invalid_argument("ray_chord: direction must be unit");
    if (std::holds_alternative<Ball>(K.rep)) {
        const auto& ball = std::get<Ball>(K.rep);
        const Vec p = x - ball.center;
        const double pu = dot(p, u);
        const double disc = pu * pu - (dot(p, p) - ball.radius * ball.radius);
        if (disc <= 0.0) throw std::invalid_argument("ray_chord: point not strictly interior");
        const double s = std::sqrt(disc);
        return Chord{s + pu, s - pu};
    }
    if (std::holds_alternative<VPolytope>(K.rep) && K.dim() > 2) {
        // No exact facet list in d >= 3; bisect on hull membership.
        const auto& vp = std::get<VPolytope>(K.rep);
        if (!contains(K, x, -1e-12)) {
            if (!contains(K, x, kDefaultTol))
                throw std::invalid_argument("ray_chord: point not strictly interior");
        }
        auto solve = [&](const Vec& dir) {
            double hi = 1e-12;
            for (const auto& v : vp.vertices) hi = std::max(hi, dot(dir, v) - dot(dir, x));
            double lo = 0.0;
            hi += 1e-6;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                if (contains(K, x + mid * dir, 1e-12))
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        };
        return Chord{solve(-u), solve(u)};
    }
    HPolytope P = to_hrep(K);
    Chord ch = hrep_chord(P, x, u);
    if (ch.rho_minus <= 0.0 || ch.rho_plus <= 0.0)
        throw std::invalid_argument("ray_chord: point not strictly interior");
    return ch;
}

std::vector<Vec> hull2d(const std::vector<Vec>& points) {
    if (points.size() < 3) throw std::invalid_argument("hull2d: need at least 3 points");
    for (const auto& p : points)
        if (p.size() != 2) throw std::invalid_argument("hull2d: points must be 2-D");
    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) {
                              return std::abs(a[0] - b[0]) < 1e-12 && std::abs(a[1] - b[1]) < 1e-12;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    std::vector<Vec> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower_end && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw std::invalid_argument("hull2d: all points collinear");
    return hull;
}

HPolytope to_hrep(const ConvexBody& K) {
    return std::visit(
        [&](const auto& v) -> HPolytope {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HPolytope>) {
                return v;
            } else if constexpr (std::is_same_v<T, VPolytope>) {
                if (v.vertices[0].size() != 2)
                    throw std::invalid_argument("to_hrep: V-to-H conversion only for d = 2");
                auto h = hull2d(v.vertices);
                HPolytope P;
                for (std::size_t i = 0; i < h.size(); ++i) {
                    const Vec& a = h[i];
                    const Vec& b = h[(i + 1) % h.size()];
                    Vec n = normalized(Vec{b[1] - a[1], a[0] - b[0]});
                    P.normals.push_back(n);
                    P.offsets.push_back(dot(n, a));
                }
                return P;
            } else if constexpr (std::is_same_v<T, Box>) {
                HPolytope P;
                const std::size_t d = v.lower.size();
                for (std::size_t i = 0; i < d; ++i) {
                    Vec n(d, 0.0);
                    n[i] = 1.0;
                    P.normals.push_back(n);
                    P.offsets.push_back(v.upper[i]);
                    n[i] = -1.0;
                    P.normals.push_back(n);
                    P.offsets.push_back(-v.lower[i]);
                }
                return P;
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                HPolytope P;
                const std::size_t d = static_cast<std::size_t>(v.dim);
                for (std::size_t i = 0; i < d; ++i) {
                    Vec n(d, 0.0);
                    n[i] = -1.0;
                    P.normals.push_back(n);
                    P.offsets.push_back(0.0);
                }
                Vec n(d, 1.0 / std::sqrt(static_cast<double>(d)));
                P.normals.push_back(n);
                P.offsets.push_back(1.0 / std::sqrt(static_cast<double>(d)));
                return P;
            } else {
                throw std::invalid_argument("to_hrep: variant has no exact H-representation");
            }
        },
        K.rep);
}

std::vector<Vec> polytope_vertices(const ConvexBody& K) {
    return std::visit(
        [&](const auto& v) -> std::vector<Vec> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, VPolytope>) {
                return v.vertices;
            } else if constexpr (std::is_same_v<T, Box>) {
                const std::size_t d = v.lower.size();
                if (d > 20) throw std::invalid_argument("polytope_vertices: box dimension too large");
                std::vector<Vec> out;
                for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
                    Vec p(d);
                    for (std::size_t i = 0; i < d; ++i)
                        p[i] = (mask >> i) & 1 ? v.upper[i] : v.lower[i];
                    out.push_back(std::move(p));
                }
                return out;
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                const std::size_t d = static_cast<std::size_t>(v.dim);
                std::vector<Vec> out{Vec(d, 0.0)};
                for (std::size_t i = 0; i < d; ++i) {
                    Vec e(d, 0.0);
                    e[i] = 1.0;
                    out.push_back(std::move(e));
                }
                return out;
            } else if constexpr (std::is_same_v<T, HPolytope>) {
                const std::size_t d = v.normals[0].size();
                if (d == 1) {
                    // Single-variable facets: x <= c or -x <= c.
                    double lo = -std::numeric_limits<double>::infinity();
                    double hi = std::numeric_limits<double>::infinity();
                    for (std::size_t i = 0; i < v.normals.size(); ++i) {
                        if (v.normals[i][0] > 0) hi = std::min(hi, v.offsets[i] / v.normals[i][0]);
                        else lo = std::max(lo, v.offsets[i] / v.normals[i][0]);
                    }
                    return {Vec{lo}, Vec{hi}};
                }
                if (d != 2)
                    throw std::invalid_argument(
                        "polytope_vertices: H-polytope vertex enumeration only for d <= 2");
                std::vector<Vec> cand;
                for (std::size_t i = 0; i < v.normals.size(); ++i) {
                    for (std::size_t j = i + 1; j < v.normals.size(); ++j) {
                        const double det = v.normals[i][0] * v.normals[j][1] -
                                           v.normals[i][1] * v.normals[j][0];
                        if (std::abs(det) < 1e-12) continue;
                        Vec p{(v.offsets[i] * v.normals[j][1] - v.offsets[j] * v.normals[i][1]) / det,
                              (v.normals[i][0] * v.offsets[j] - v.normals[j][0] * v.offsets[i]) / det};
                        bool ok = true;
                        for (std::size_t k = 0; k < v.normals.size(); ++k)
                            if (dot(v.normals[k], p) > v.offsets[k] + 1e-8) { ok = false; break; }
                        if (ok) cand.push_back(std::move(p));
                    }
                }
                return hull2d(cand);
            } else {
                throw std::invalid_argument("polytope_vertices: not a polytope variant");
            }
        },
        K.rep);
}

bool is_polytope(const ConvexBody& K) {
    return std::holds_alternative<HPolytope>(K.rep) || std::holds_alternative<VPolytope>(K.rep) ||
           std::holds_alternative<Box>(K.rep) || std::holds_alternative<StandardSimplex>(K.rep);
}

std::optional<Vec> symmetry_center(const ConvexBody& K) {
    if (const auto* b = std::get_if<Ball>(&K.rep)) return b->center;
    if (const auto* b = std::get_if<Box>(&K.rep)) return 0.5 * (b->lower + b->upper);
    if (std::holds_alternative<SymmetrizedSupport>(K.rep)) return Vec(K.dim(), 0.0);
    // Polytopes: centrally symmetric iff the vertex set is symmetric about
    // its own centroid (catches exact 2-D symmetrizations).
    if (is_polytope(K)) {
        auto verts = polytope_vertices(K);
        Vec c(K.dim(), 0.0);
        for (const auto& v : verts) c = c + v;
        c = (1.0 / verts.size()) * c;
        for (const auto& v : verts) {
            const Vec mirror = c + (c - v);
            bool found = false;
            for (const auto& w : verts)
                if (norm2(w - mirror) <= 1e-9 * (1.0 + norm2(c - v))) {
                    found = true;
                    break;
                }
            if (!found) return std::nullopt;
        }
        return c;
    }
    return std::nullopt;
}

ConvexBody central_symmetrization(const ConvexBody& K) {
    return std::visit(
        [&](const auto& v) -> ConvexBody {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return ConvexBody{Ball{Vec(v.center.size(), 0.0), v.radius}};
            } else if constexpr (std::is_same_v<T, Box>) {
                Vec s = 0.5 * (v.upper - v.lower);
                return ConvexBody{Box{-s, s}};
            } else if constexpr (std::is_same_v<T, SymmetrizedSupport>) {
                return K;  // already centrally symmetric
            } else {
                std::vector<Vec> verts;
                if constexpr (std::is_same_v<T, HPolytope>) {
                    if (v.normals[0].size() > 2)
                        return ConvexBody{SymmetrizedSupport{std::make_shared<ConvexBody>(K)}};
                    verts = polytope_vertices(K);
                } else {
                    verts = polytope_vertices(K);
                }
                std::vector<Vec> diffs;
                for (const auto& a : verts)
                    for (const auto& b : verts) diffs.push_back(0.5 * (a - b));
                if (K.dim() == 2) return ConvexBody{VPolytope{hull2d(diffs)}};
                if (K.dim() == 1) {
                    double hi = 0.0;
                    for (const auto& p : diffs) hi = std::max(hi, std::abs(p[0]));
                    return ConvexBody{Box{Vec{-hi}, Vec{hi}}};
                }
                return ConvexBody{VPolytope{std::move(diffs)}};
            }
        },
        K.rep);
}

}  // namespace polyineq
