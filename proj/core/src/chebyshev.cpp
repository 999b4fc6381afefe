#include "polyineq/chebyshev.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polyineq {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Clenshaw evaluation of sum a_j T_j(x); valid for any real x.
double clenshaw(const std::vector<double>& a, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t j = a.size(); j-- > 1;) {
        double b0 = 2.0 * x * b1 - b2 + a[j];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + (a.empty() ? 0.0 : a[0]);
}

// Chebyshev-basis differentiation (the classical descending recurrence).
std::vector<double> cheb_diff(const std::vector<double>& a) {
    const std::size_t n = a.size();
    if (n <= 1) return {0.0};
    std::vector<double> d(n - 1, 0.0);
    if (n >= 2) d[n - 2] = 2.0 * (n - 1) * a[n - 1];
    if (n >= 3) d[n - 3] = 2.0 * (n - 2) * a[n - 2];
    for (std::size_t j = n - 1; j-- > 2;) d[j - 2] = d[j] + 2.0 * (j - 1) * a[j - 1];
    d[0] *= 0.5;
    return d;
}

}  // namespace

double cheb_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("cheb_eval: negative degree");
    if (n == 0) return 1.0;
    const double ax = std::abs(x);
    if (ax <= 1.0) return std::cos(n * std::acos(x));
    const double sign = (x < 0 && n % 2 == 1) ? -1.0 : 1.0;
    return sign * std::cosh(n * std::acosh(ax));
}

double cheb_derivative(int n, int k, double x) {
    if (n < 0 || k < 0) throw std::invalid_argument("cheb_derivative: negative argument");
    if (k > n) return 0.0;  // documented: the k-th derivative of T_n vanishes
    std::vector<double> a(n + 1, 0.0);
    a[n] = 1.0;
    for (int i = 0; i < k; ++i) a = cheb_diff(a);
    return clenshaw(a, x);
}

double RidgePolynomial::eval(const Vec& point) const {
    return cheb_eval(n, t_functional(*body, v, point));
}

double cheb_growth(const ConvexBody& K, const Vec& x, int n, const Config& cfg) {
    if (n < 0) throw std::invalid_argument("cheb_growth: negative degree");
    if (contains(K, x, cfg.contain_tol)) return 1.0;
    const double a = alpha(K, x, cfg).alpha;
    if (a <= 1.0 + 1e-12) return 1.0;  // continuity at the boundary
    return cheb_eval(n, a);
}

RidgePolynomial extremal_ridge(const ConvexBody& K, const Vec& x, int n, const Config& cfg) {
    if (contains(K, x, cfg.contain_tol))
        throw std::invalid_argument("extremal_ridge: point must lie outside the body");
    AlphaResult a = alpha(K, x, cfg);
    return RidgePolynomial{n, a.witness, std::make_shared<ConvexBody>(K)};
}

double homogeneous_growth(const ConvexBody& K, const Vec& v, int n) {
    if (n < 1) throw std::invalid_argument("homogeneous_growth: degree must be >= 1");
    const double tau = maximal_chord(K, v);
    return std::exp2(2.0 * n - 1.0) / std::pow(tau, n);
}

double extremal_value_real(const ConvexBody& K, const Vec& x, const Config& cfg) {
    if (contains(K, x, cfg.contain_tol)) return 0.0;
    const double a = alpha(K, x, cfg).alpha;
    if (a <= 1.0) return 0.0;
    return std::log(a + std::sqrt(a * a - 1.0));
}

double markov_bound(MarkovKind kind, int n, const MarkovParams& params) {
    if (n < 1) throw std::invalid_argument("markov_bound: degree must be >= 1");
    switch (kind) {
        case MarkovKind::interval:
            if (!(params.a < params.b)) throw std::invalid_argument("markov_bound: need a < b");
            return 2.0 * n * n / (params.b - params.a);
        case MarkovKind::symmetric:
            if (!(params.width > 0)) throw std::invalid_argument("markov_bound: need width > 0");
            return 2.0 * n * n / params.width;
        case MarkovKind::unit_ball:
            return static_cast<double>(n) * n;
        case MarkovKind::general:
            if (!(params.width > 0)) throw std::invalid_argument("markov_bound: need width > 0");
            // cot(pi/4) = 1 exactly; bypass the half-ulp of std::tan so the
            // n = 1 factor coincides bit-for-bit with the symmetric bound.
            if (n == 1) return 2.0 / params.width;
            return 2.0 * n / std::tan(kPi / (4.0 * n)) / params.width;
    }
    throw std::invalid_argument("markov_bound: unknown kind");
}

double markov_bound(MarkovKind kind, int n, const ConvexBody& K, const Config& cfg) {
    MarkovParams p;
    p.width = minimal_width(K, cfg);
    return markov_bound(kind, n, p);
}

double vmarkov_factor(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("vmarkov_factor: need 1 <= k <= n");
    return cheb_derivative(n, k, 1.0);
}

}  // namespace polyineq
