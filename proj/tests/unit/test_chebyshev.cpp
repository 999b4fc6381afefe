#include <doctest.h>

#include <cmath>
#include <random>

#include "polyineq/chebyshev.hpp"

using namespace polyineq;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Three-term recurrence; the independent reference for cheb_eval.
double cheb_recurrence(int n, double x) {
    double a = 1.0, b = x;
    if (n == 0) return a;
    for (int k = 2; k <= n; ++k) {
        double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return b;
}
}  // namespace

TEST_CASE("chebyshev: cosine identity up to n = 50") {
    for (int n = 0; n <= 50; ++n) {
        for (int k = 0; k < 20; ++k) {
            double theta = kPi * (k + 0.5) / 20.0;
            CHECK(std::abs(cheb_eval(n, std::cos(theta)) - std::cos(n * theta)) <= 1e-10);
        }
    }
}

TEST_CASE("chebyshev: branch form vs recurrence on [-3, 3]") {
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= 120; ++k) {
            double x = -3.0 + 6.0 * k / 120.0;
            double ref = cheb_recurrence(n, x);
            double got = cheb_eval(n, x);
            CHECK(std::abs(got - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("chebyshev: derivative recurrences") {
    CHECK(cheb_derivative(3, 1, 1.0) == doctest::Approx(9.0));   // T_n'(1) = n^2
    CHECK(cheb_derivative(5, 1, 1.0) == doctest::Approx(25.0));
    CHECK(cheb_derivative(4, 5, 0.3) == 0.0);                    // k > n
    CHECK(cheb_derivative(6, 0, 0.4) == doctest::Approx(cheb_eval(6, 0.4)));
    // Central finite difference cross-check.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int s = 0; s < 30; ++s) {
        int n = 1 + static_cast<int>(rng() % 8);
        double x = U(rng);
        double h = 1e-6;
        double fd = (cheb_eval(n, x + h) - cheb_eval(n, x - h)) / (2.0 * h);
        CHECK(cheb_derivative(n, 1, x) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("growth: C_n is 1 on the body and T_n(alpha) outside") {
    auto tri = make_simplex(2);
    CHECK(cheb_growth(tri, Vec{0.2, 0.2}, 5) == doctest::Approx(1.0));
    Vec x{1.0, 1.0};
    double a = alpha(tri, x).alpha;
    CHECK(a > 1.0);
    for (int n = 1; n <= 4; ++n)
        CHECK(cheb_growth(tri, x, n) == doctest::Approx(cheb_eval(n, a)).epsilon(1e-10));
    // d = 1: alpha(x) = |x| for [-1, 1], so C_n(x) = T_n(|x|).
    auto seg = make_box(Vec{-1.0}, Vec{1.0});
    CHECK(cheb_growth(seg, Vec{2.0}, 3) == doctest::Approx(26.0));
    CHECK(cheb_growth(seg, Vec{-2.0}, 3) == doctest::Approx(26.0));
}

TEST_CASE("growth: extremal ridge polynomial attains the constant") {
    auto tri = make_simplex(2);
    Vec x{0.8, 0.8};
    for (int n : {2, 3}) {
        auto p = extremal_ridge(tri, x, n);
        CHECK(p.eval(x) == doctest::Approx(cheb_growth(tri, x, n)).epsilon(1e-7));
        // Normalized: |p| <= 1 on the body.
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; i + j <= 20; ++j) {
                Vec g{i / 20.0, j / 20.0};
                CHECK(std::abs(p.eval(g)) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("growth: homogeneous constant 2^(2n-1) / tau^n") {
    auto tri = make_simplex(2);
    CHECK(homogeneous_growth(tri, Vec{1.0, 0.0}, 3) == doctest::Approx(32.0));
    CHECK(homogeneous_growth(tri, Vec{1.0, 1.0}, 2) == doctest::Approx(8.0 / 0.25));
    auto seg = make_box(Vec{-1.0}, Vec{1.0});
    for (int n = 1; n <= 6; ++n)
        CHECK(homogeneous_growth(seg, Vec{1.0}, n) == doctest::Approx(std::ldexp(1.0, n - 1)));
}

TEST_CASE("growth: extremal function value") {
    auto tri = make_simplex(2);
    CHECK(extremal_value_real(tri, Vec{0.3, 0.3}) == doctest::Approx(0.0));
    Vec x{1.0, 1.0};
    double a = alpha(tri, x).alpha;
    CHECK(extremal_value_real(tri, x) ==
          doctest::Approx(std::log(a + std::sqrt(a * a - 1.0))).epsilon(1e-10));
}

TEST_CASE("markov: classical and generalized bounds") {
    MarkovParams seg;  // [-1, 1]
    CHECK(markov_bound(MarkovKind::interval, 3, seg) == doctest::Approx(9.0));
    CHECK(vmarkov_factor(3, 1) == doctest::Approx(9.0));
    CHECK(vmarkov_factor(4, 2) == doctest::Approx(cheb_derivative(4, 2, 1.0)));
    // Symmetric and general coincide for n = 1 at equal width.
    MarkovParams p;
    p.width = 2.0;
    CHECK(markov_bound(MarkovKind::general, 1, p) ==
          doctest::Approx(markov_bound(MarkovKind::symmetric, 1, p)));
    // The general bound uses the Skalyga factor 2n cot(pi / 4n) / width.
    MarkovParams w2;
    w2.width = 2.0;
    double n3 = markov_bound(MarkovKind::general, 3, w2);
    CHECK(n3 == doctest::Approx(2.0 * 3 * (1.0 / std::tan(kPi / 12.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("markov: Skalyga asymptotic approaches 8 n^2 / (pi w)") {
    double n = 1e4;
    double val = 2.0 * n / std::tan(kPi / (4.0 * n));
    CHECK(val / (n * n) == doctest::Approx(8.0 / kPi).epsilon(1e-4));
}
