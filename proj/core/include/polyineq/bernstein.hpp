#pragma once

#include <utility>

#include "polyineq/body.hpp"
#include "polyineq/config.hpp"

namespace polyineq {

// r(t) = cos t * a + b sin t * y + (x - a): passes through x at t = 0
// with tangent b * y there.
struct InscribedEllipse {
    Vec x;     // anchor, r(0) = x
    Vec a;     // axis vector; the center is x - a
    Vec y;     // unit tangent direction
    double b;  // tangent semi-axis scale

    Vec point_at(double t) const;
};

struct EllipseResult {
    double E = 0.0;
    InscribedEllipse ellipse;
    int iterations = 0;
    bool certified = false;
};

// Exact containment test for H-polytopes: per facet the amplitude reduction
// sup_t <n, r(t)> = <n, x - a> + sqrt(<n,a>^2 + b^2 <n,y>^2) turns the
// containment into one closed-form constraint per facet.
bool ellipse_in_body(const ConvexBody& K, const InscribedEllipse& e, double tol);

// E(K, x, y): bisection over b with a convex feasibility subproblem in a.
// Non-polytope 2-D bodies are H-approximated by support cuts.
EllipseResult best_ellipse(const ConvexBody& K, const Vec& x, const Vec& y,
                           const Config& cfg = {});

// Closed form on the standard simplex (any dimension).
double best_ellipse_simplex(const Vec& x, const Vec& y);

// Classical symmetric-body construction b = sqrt(1 - phi^2(K - c, x - c)) /
// phi(K - c, y): the tangent scale of the centered ellipse with a = x - c.
// A certified lower bound for E(K, x, y); exact at the center, where both
// equal tau(K, y) / 2, but beatable off-center (the axis vector is free).
double best_ellipse_symmetric(const ConvexBody& K, const Vec& x, const Vec& y);

// E(K, x) = inf over unit y, with the minimizing direction.
std::pair<double, Vec> worst_direction_E(const ConvexBody& K, const Vec& x,
                                         const Config& cfg = {});

// Gradient-form ellipse yield on the standard triangle (d = 2 closed form).
double milev_E(const Vec& x);

enum class BernsteinKind {
    ellipse,              // n / E(K, x, y)
    kroo_revesz_dir,      // 2n / (tau(K, y) sqrt(1 - alpha))
    kroo_revesz_grad,     // 2n / (w(K) sqrt(1 - alpha))
    kroo_revesz_grad_sq,  // 2 sqrt(2) n / (w(K) sqrt(1 - alpha^2))
    conjecture            // 2n / (w(K) sqrt(1 - alpha^2))
};

// Factor multiplying sqrt(||p||^2 - p(x)^2) in the corresponding bound.
// y is required for the directional kinds and ignored otherwise.
double bernstein_bound(BernsteinKind kind, int n, const ConvexBody& K, const Vec& x,
                       const Vec& y = {}, const Config& cfg = {});

// Ridge Bernstein constant C(K, x, y) = sup over unit v of
// 2 <v, y> / (w(K, v) sqrt(1 - t(K, v, x)^2)). n-independent: T_n attains
// the Bernstein-Szego identity, so the normalized sup does not depend on
// the degree.
double ridge_constant(const ConvexBody& K, const Vec& x, const Vec& y, const Config& cfg = {});

// Extremal function of the standard simplex at the complex point z_re + i z_im,
// V = log h(sum |z_j| + |1 - sum z_j|) with h(t) = t + sqrt(t^2 - 1).
double baran_simplex_V(const Vec& z_re, const Vec& z_im);

struct NormalDerivative {
    double value = 0.0;
    double error = 0.0;   // Richardson extrapolation consistency estimate
    bool monotone = true;  // the epsilon sweep decreased monotonically
};

// One-sided normal derivative of V along i*y at an interior point of the
// simplex, by a geometric epsilon sweep with Richardson extrapolation.
NormalDerivative baran_normal_derivative(const Vec& x, const Vec& y);

// |D_y+ V * E(Delta, x, y) - 1|: zero under the ellipse/pluripotential
// coincidence hypothesis.
double hypothesis_gap(const Vec& x, const Vec& y);

}  // namespace polyineq
