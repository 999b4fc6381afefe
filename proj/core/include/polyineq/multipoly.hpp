#pragma once

#include <vector>

#include "polyineq/vec.hpp"

namespace polyineq {

// Monomial exponent tuples of total degree <= n in d variables,
// graded-lexicographic order. The coefficient layout of MultiPoly.
std::vector<std::vector<int>> monomial_exponents(int dim, int degree);

// C(n + d, d)
std::size_t monomial_count(int dim, int degree);

struct MultiPoly {
    int dim = 1;
    int degree = 0;
    std::vector<double> coeffs;  // graded-lex monomial order

    double eval(const Vec& x) const;
    Vec gradient(const Vec& x) const;
};

}  // namespace polyineq
