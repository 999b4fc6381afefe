#pragma once

#include <memory>
#include <utility>

#include "polyineq/body.hpp"
#include "polyineq/config.hpp"
#include "polyineq/lp.hpp"
#include "polyineq/multipoly.hpp"

namespace polyineq {

// Discretization of the sup-norm constraint ||p||_K <= 1: a body-intersected
// lattice plus all polytope vertices and per-facet boundary samples (d = 2).
struct GridSpec {
    std::shared_ptr<const ConvexBody> body;
    int resolution = 41;
    std::vector<Vec> points;
};

GridSpec make_grid(const ConvexBody& K, int resolution, const Config& cfg = {});

// Brute-force C_n(K, x): max p(x) subject to |p(g)| <= 1 on the grid,
// tightened by cutting-plane refinement against a dense check set.
// Grid relaxation makes this an upper bound decreasing under refinement.
std::pair<double, MultiPoly> chebyshev_oracle(const ConvexBody& K, const Vec& x, int n,
                                              const GridSpec& grid, const Config& cfg = {});

// Brute-force A_n(K, v): max of the degree-n homogeneous part at v.
double leading_growth_oracle(const ConvexBody& K, const Vec& v, int n, const GridSpec& grid,
                             const Config& cfg = {});

// Brute-force estimate of n * B_n(K, x, y) via the p(x) = c slice sweep.
double bernstein_oracle(const ConvexBody& K, const Vec& x, const Vec& y, int n,
                        const GridSpec& grid, int c_sweep, const Config& cfg = {});

}  // namespace polyineq
