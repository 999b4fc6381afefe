#pragma once

#include <memory>

#include "polyineq/body.hpp"
#include "polyineq/config.hpp"
#include "polyineq/geometry.hpp"

namespace polyineq {

// T_n(x), cos branch on [-1,1], cosh branch (with sign) outside.
double cheb_eval(int n, double x);

// k-th derivative of T_n via exact Chebyshev coefficient recurrences.
// k > n returns 0.
double cheb_derivative(int n, int k, double x);

// p(x) = T_n(t(K, v, x)); the extremal ridge polynomial. Normalized so that
// sup over K of |p| = 1.
struct RidgePolynomial {
    int n = 0;
    DirectionalFunctional v;
    std::shared_ptr<const ConvexBody> body;

    double eval(const Vec& point) const;
};

// C_n(K, x): 1 on K, T_n(alpha(K, x)) outside.
double cheb_growth(const ConvexBody& K, const Vec& x, int n, const Config& cfg = {});

// Extremal ridge polynomial attaining C_n(K, x) for x outside K.
RidgePolynomial extremal_ridge(const ConvexBody& K, const Vec& x, int n, const Config& cfg = {});

// A_n(K, v) = 2^(2n-1) / tau(K, v)^n.
double homogeneous_growth(const ConvexBody& K, const Vec& v, int n);

// Real restriction of the Siciak-Zaharjuta extremal function:
// 0 on K, log(alpha + sqrt(alpha^2 - 1)) outside.
double extremal_value_real(const ConvexBody& K, const Vec& x, const Config& cfg = {});

enum class MarkovKind { interval, symmetric, unit_ball, general };

struct MarkovParams {
    double a = -1.0, b = 1.0;  // interval
    double width = 0.0;        // symmetric / general
};

double markov_bound(MarkovKind kind, int n, const MarkovParams& params);
double markov_bound(MarkovKind kind, int n, const ConvexBody& K, const Config& cfg = {});

// V. Markov factor T_n^(k)(1), by exact derivative evaluation.
double vmarkov_factor(int n, int k);

}  // namespace polyineq
