#pragma once

#include <cstddef>
#include <vector>

namespace polyineq {

enum class LPStatus { optimal, infeasible, unbounded };
enum class LPSense { maximize, minimize };

struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    double objective = 0.0;
    std::vector<double> primal;
    int iterations = 0;
};

// Dense row-major matrix, minimal on purpose: the LPs here are small
// and the simplex tableau dominates memory anyway.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Optimize c^T z subject to A z <= b over free variables z.
// Two-phase dense simplex with Bland's anti-cycling rule; fully deterministic.
// Infeasible/unbounded problems are reported through the status field.
LPSolution lp_solve(const DenseMatrix& A, const std::vector<double>& b,
                    const std::vector<double>& c, LPSense sense);

// Same problem, solved through its dual tableau. Much faster when the
// constraint count dwarfs the variable count (the oracle LPs: thousands of
// sup-norm rows over a few dozen polynomial coefficients). Requires a
// feasible primal; an infeasible dual is reported as primal unboundedness.
LPSolution lp_solve_wide(const DenseMatrix& A, const std::vector<double>& b,
                         const std::vector<double>& c, LPSense sense);

}  // namespace polyineq
