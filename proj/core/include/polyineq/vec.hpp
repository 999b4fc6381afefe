#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace polyineq {

// Points, directions and dual functionals are all plain coordinate vectors.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec operator-(const Vec& a) { return -1.0 * a; }

inline Vec normalized(const Vec& a) {
    double n = norm2(a);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    return (1.0 / n) * a;
}

inline bool is_unit(const Vec& a, double tol = 1e-12) {
    return std::abs(norm2(a) - 1.0) <= tol;
}

inline bool all_finite(const Vec& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

// Unit vector in the Euclidean-identified dual space.
struct DirectionalFunctional {
    Vec v;

    explicit DirectionalFunctional(Vec dir) : v(std::move(dir)) {
        if (!is_unit(v)) throw std::invalid_argument("DirectionalFunctional: not unit length");
    }

    std::size_t dim() const { return v.size(); }
};

}  // namespace polyineq
