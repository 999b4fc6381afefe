#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "polyineq/vec.hpp"

namespace polyineq {

struct ConvexBody;

// Facets n_i . x <= c_i with unit normals.
struct HPolytope {
    std::vector<Vec> normals;
    std::vector<double> offsets;
};

// Generator points; the body is their convex hull. Points must affinely
// span the ambient dimension, but redundant interior generators are allowed.
struct VPolytope {
    std::vector<Vec> vertices;
};

struct Ball {
    Vec center;
    double radius = 1.0;
};

struct Box {
    Vec lower;
    Vec upper;
};

// Delta_d = { x_i >= 0, sum x_i <= 1 }.
struct StandardSimplex {
    int dim = 1;
};

// Central symmetrization of a body kept only through its support oracle,
// h(C, v) = w(inner, v) / 2. Used when an exact hull is unavailable (d >= 3).
struct SymmetrizedSupport {
    std::shared_ptr<const ConvexBody> inner;
};

struct ConvexBody {
    std::variant<HPolytope, VPolytope, Ball, Box, StandardSimplex, SymmetrizedSupport> rep;

    std::size_t dim() const;
};

struct Chord {
    double rho_minus = 0.0;
    double rho_plus = 0.0;
};

constexpr double kDefaultTol = 1e-9;

// Validating constructors. Each throws std::invalid_argument on a bad input
// (unbounded H-polytope, empty interior, degenerate vertex set, ...).
ConvexBody make_hpolytope(std::vector<Vec> normals, std::vector<double> offsets);
ConvexBody make_vpolytope(std::vector<Vec> vertices);
ConvexBody make_ball(Vec center, double radius);
ConvexBody make_box(Vec lower, Vec upper);
ConvexBody make_simplex(int dim);

bool contains(const ConvexBody& K, const Vec& x, double tol = kDefaultTol);

// Chord of K through the strictly interior point x along the unit direction u.
Chord ray_chord(const ConvexBody& K, const Vec& x, const Vec& u);

// C(K) = (K - K) / 2. Exact vertex representation where available
// (ball, box, simplex, any V-polytope, 2-D H-polytope); otherwise a
// support-oracle-backed symmetrized body.
ConvexBody central_symmetrization(const ConvexBody& K);

// Counter-clockwise convex hull of 2-D points, collinear points removed.
std::vector<Vec> hull2d(const std::vector<Vec>& points);

// H-representation with unit normals. Available for H-polytopes, boxes,
// simplices and 2-D V-polytopes; throws for other variants.
HPolytope to_hrep(const ConvexBody& K);

// Generator points for polytope variants (V-polytope generators, box corners,
// simplex vertices, 2-D H-polytope vertex enumeration); throws otherwise.
std::vector<Vec> polytope_vertices(const ConvexBody& K);

bool is_polytope(const ConvexBody& K);

// Center of symmetry for the variants that are centrally symmetric by
// construction (ball, box, symmetrized bodies). nullopt otherwise.
std::optional<Vec> symmetry_center(const ConvexBody& K);

}  // namespace polyineq
