#include "polyineq/multipoly.hpp"

#include <cmath>
#include <stdexcept>

namespace polyineq {

namespace {

void gen_degree(int dim, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == dim - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur.push_back(e);
        gen_degree(dim, total - e, cur, out);
        cur.pop_back();
    }
}

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

std::vector<std::vector<int>> monomial_exponents(int dim, int degree) {
    if (dim < 1 || degree < 0) throw std::invalid_argument("monomial_exponents: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int g = 0; g <= degree; ++g) gen_degree(dim, g, cur, out);
    return out;
}

std::size_t monomial_count(int dim, int degree) {
    std::size_t c = 1;
    for (int i = 1; i <= dim; ++i) c = c * (degree + i) / i;
    return c;
}

double MultiPoly::eval(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("MultiPoly::eval: dimension mismatch");
    auto exps = monomial_exponents(dim, degree);
    if (exps.size() != coeffs.size()) throw std::invalid_argument("MultiPoly: coefficient count mismatch");
    double s = 0.0;
    for (std::size_t m = 0; m < exps.size(); ++m) {
        double term = coeffs[m];
        for (int j = 0; j < dim; ++j) term *= ipow(x[j], exps[m][j]);
        s += term;
    }
    return s;
}

Vec MultiPoly::gradient(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("MultiPoly::gradient: dimension mismatch");
    auto exps = monomial_exponents(dim, degree);
    if (exps.size() != coeffs.size()) throw std::invalid_argument("MultiPoly: coefficient count mismatch");
    Vec g(dim, 0.0);
    for (std::size_t m = 0; m < exps.size(); ++m) {
        for (int k = 0; k < dim; ++k) {
            if (exps[m][k] == 0) continue;
            double term = coeffs[m] * exps[m][k];
            for (int j = 0; j < dim; ++j) {
                const int e = (j == k) ? exps[m][j] - 1 : exps[m][j];
                term *= ipow(x[j], e);
            }
            g[k] += term;
        }
    }
    return g;
}

}  // namespace polyineq
