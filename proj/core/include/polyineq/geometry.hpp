#pragma once

#include <functional>

#include "polyineq/body.hpp"
#include "polyineq/config.hpp"
#include "polyineq/vec.hpp"

namespace polyineq {

// h(K, v) = sup over K of <v, .>. v need not be unit.
double support(const ConvexBody& K, const Vec& v);

// w(K, v) = h(K, v) + h(K, -v).
double width_dir(const ConvexBody& K, const DirectionalFunctional& v);

// Minimal width over all unit directions.
double minimal_width(const ConvexBody& K, const Config& cfg = {});

// Maximal chord tau(K, v). v is deliberately NOT normalized:
// tau(K, c v) = tau(K, v) / c.
double maximal_chord(const ConvexBody& K, const Vec& v);

// Minkowski gauge phi_K(x) for bodies with the origin strictly interior.
double gauge(const ConvexBody& K, const Vec& x);

// Layer coordinate t(K, v, x) = (2<v,x> - h(K,v) + h(K,-v)) / w(K,v),
// mapping the supporting layer with normal v onto [-1, 1].
double t_functional(const ConvexBody& K, const DirectionalFunctional& v, const Vec& x);

enum class AlphaMethod { closed_form, sphere_opt, gamma_route };

struct AlphaResult {
    double alpha = 0.0;
    DirectionalFunctional witness;
    AlphaMethod method = AlphaMethod::sphere_opt;
    bool converged = true;
};

// Generalized Minkowski functional alpha(K, x) = sup over unit v of t(K,v,x),
// with the maximizing direction as witness. Closed forms where available,
// otherwise a deterministic sphere search (certified lower bound).
AlphaResult alpha(const ConvexBody& K, const Vec& x, const Config& cfg = {});

// Chord-ratio route: gamma = inf over unit u of 2 sqrt(rho- rho+)/(rho- + rho+).
// alpha = sqrt(1 - gamma^2) gives the independent cross-check.
double gamma_functional(const ConvexBody& K, const Vec& x, const Config& cfg = {});

// Membership in the dilated-layer body K^lambda, via the alpha identification.
bool in_Klambda(const ConvexBody& K, const Vec& x, double lam, const Config& cfg = {});

// Deterministic sphere search shared by the d >= 3 numeric routes.
// Minimizes f over unit vectors with projected finite-difference descent
// from multistart seeded directions plus the supplied candidate starts.
Vec sphere_minimize(std::size_t dim, const std::function<double(const Vec&)>& f,
                    const std::vector<Vec>& extra_starts, const Config& cfg);

}  // namespace polyineq
