#include "polyineq/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyineq {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr int kMaxIterations = 200000;

struct Tableau {
    std::size_t m;     // constraint rows
    std::size_t ncol;  // total columns excluding RHS
    std::vector<double> t;  // (m + 1) x (ncol + 1), last row = reduced costs
    std::vector<std::size_t> basis;

    Tableau(std::size_t m_, std::size_t ncol_)
        : m(m_), ncol(ncol_), t((m_ + 1) * (ncol_ + 1), 0.0), basis(m_, 0) {}

    double& at(std::size_t i, std::size_t j) { return t[i * (ncol + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * (ncol + 1) + j]; }
    double& rhs(std::size_t i) { return t[i * (ncol + 1) + ncol]; }
    double rhs(std::size_t i) const { return t[i * (ncol + 1) + ncol]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const std::size_t w = ncol + 1;
        double* prow = &t[pr * w];
        const double inv = 1.0 / prow[pc];
        for (std::size_t j = 0; j < w; ++j) prow[j] *= inv;
        prow[pc] = 1.0;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == pr) continue;
            double* row = &t[i * w];
            const double f = row[pc];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < w; ++j) row[j] -= f * prow[j];
            row[pc] = 0.0;
        }
        basis[pr] = pc;
    }
};

// Minimize the objective stored in the last tableau row.
// Returns false when the problem is unbounded below.
// Entering rule: Dantzig (most negative reduced cost) for speed, switching
// to Bland's anti-cycling rule whenever the objective stalls on degenerate
// pivots, which preserves the finite-termination guarantee.
bool run_simplex(Tableau& tab, const std::vector<bool>& allowed, int& iterations) {
    constexpr int kStallLimit = 64;
    int stalled = 0;
    // The tableau stores the negated objective in rhs(m); progress on the
    // minimization shows up as an increase there.
    double last_obj = -std::numeric_limits<double>::infinity();
    for (;;) {
        const bool bland = stalled >= kStallLimit;
        std::size_t enter = tab.ncol;
        double most = -kCostEps;
        for (std::size_t j = 0; j < tab.ncol; ++j) {
            if (!allowed[j]) continue;
            const double rc = tab.at(tab.m, j);
            if (rc < most) {
                enter = j;
                if (bland) break;
                most = rc;
            }
        }
        if (enter == tab.ncol) return true;  // optimal

        // Ratio test; ties broken by smallest leaving basis index.
        std::size_t leave = tab.m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < tab.m; ++i) {
            double a = tab.at(i, enter);
            if (a <= kPivotEps) continue;
            double ratio = tab.rhs(i) / a;
            if (ratio < best - 1e-12 ||
                (ratio < best + 1e-12 && (leave == tab.m || tab.basis[i] < tab.basis[leave]))) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == tab.m) return false;  // unbounded

        tab.pivot(leave, enter);
        const double obj = tab.rhs(tab.m);
        if (obj > last_obj + 1e-12) {
            stalled = 0;
            last_obj = obj;
        } else {
            ++stalled;
        }
        if (++iterations > kMaxIterations)
            throw std::runtime_error("lp_solve: iteration cap exceeded");
    }
}

}  // namespace

LPSolution lp_solve(const DenseMatrix& A, const std::vector<double>& b,
                    const std::vector<double>& c, LPSense sense) {
    const std::size_t m = A.rows;
    const std::size_t n = A.cols;
    if (b.size() != m || c.size() != n)
        throw std::invalid_argument("lp_solve: inconsistent shapes");
    for (double x : A.data)
        if (!std::isfinite(x)) throw std::invalid_argument("lp_solve: non-finite matrix entry");
    for (double x : b)
        if (!std::isfinite(x)) throw std::invalid_argument("lp_solve: non-finite rhs entry");
    for (double x : c)
        if (!std::isfinite(x)) throw std::invalid_argument("lp_solve: non-finite cost entry");

    // Free variables via z = u - w; one slack per row; artificials where b < 0.
    std::size_t n_art = 0;
    for (double bi : b)
        if (bi < 0) ++n_art;

    const std::size_t col_u = 0;
    const std::size_t col_w = n;
    const std::size_t col_s = 2 * n;
    const std::size_t col_a = 2 * n + m;
    const std::size_t ncol = 2 * n + m + n_art;

    Tableau tab(m, ncol);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = (b[i] < 0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            tab.at(i, col_u + j) = sign * A(i, j);
            tab.at(i, col_w + j) = -sign * A(i, j);
        }
        tab.at(i, col_s + i) = sign;
        tab.rhs(i) = sign * b[i];
        if (b[i] < 0) {
            tab.at(i, col_a + art) = 1.0;
            tab.basis[i] = col_a + art;
            ++art;
        } else {
            tab.basis[i] = col_s + i;
        }
    }

    LPSolution sol;
    std::vector<bool> allowed(ncol, true);

    // Phase 1: minimize sum of artificials.
    if (n_art > 0) {
        for (std::size_t j = 0; j < ncol; ++j)
            tab.at(m, j) = (j >= col_a) ? 1.0 : 0.0;
        tab.rhs(m) = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < col_a) continue;
            for (std::size_t j = 0; j <= ncol; ++j) tab.at(m, j) -= tab.at(i, j);
        }
        if (!run_simplex(tab, allowed, sol.iterations))
            throw std::runtime_error("lp_solve: phase-1 unbounded (internal error)");

        double scale = 1.0;
        for (double bi : b) scale = std::max(scale, std::abs(bi));
        if (-tab.rhs(m) > 1e-7 * scale) {
            sol.status = LPStatus::infeasible;
            return sol;
        }
        // Pivot any residual artificials out of the basis.
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < col_a) continue;
            std::size_t j = 0;
            for (; j < col_a; ++j)
                if (std::abs(tab.at(i, j)) > kPivotEps) break;
            if (j < col_a) tab.pivot(i, j);
            // A fully zero row is redundant; the stranded artificial stays
            // basic at value zero and is harmless since its column is banned.
        }
        for (std::size_t j = col_a; j < ncol; ++j) allowed[j] = false;
    }

    // Phase 2 objective (internally minimized).
    std::vector<double> cost(ncol, 0.0);
    const double osign = (sense == LPSense::maximize) ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        cost[col_u + j] = osign * c[j];
        cost[col_w + j] = -osign * c[j];
    }
    for (std::size_t j = 0; j < ncol; ++j) tab.at(m, j) = cost[j];
    tab.rhs(m) = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double cb = cost[tab.basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= ncol; ++j) tab.at(m, j) -= cb * tab.at(i, j);
    }

    if (!run_simplex(tab, allowed, sol.iterations)) {
        sol.status = LPStatus::unbounded;
        return sol;
    }

    sol.primal.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = tab.basis[i];
        if (j < n)
            sol.primal[j] += tab.rhs(i);
        else if (j >= col_w && j < col_s)
            sol.primal[j - col_w] -= tab.rhs(i);
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.primal[j];
    sol.status = LPStatus::optimal;
    return sol;
}

LPSolution lp_solve_wide(const DenseMatrix& A, const std::vector<double>& b,
                         const std::vector<double>& c, LPSense sense) {
    const std::size_t m = A.rows;
    const std::size_t n = A.cols;
    if (b.size() != m || c.size() != n)
        throw std::invalid_argument("lp_solve_wide: inconsistent shapes");
    for (double x : A.data)
        if (!std::isfinite(x))
            throw std::invalid_argument("lp_solve_wide: non-finite matrix entry");
    for (double x : b)
        if (!std::isfinite(x)) throw std::invalid_argument("lp_solve_wide: non-finite rhs entry");
    for (double x : c)
        if (!std::isfinite(x)) throw std::invalid_argument("lp_solve_wide: non-finite cost entry");

    // Solve max e . z over A z <= b through the dual
    //   min b . lam  s.t.  A^T lam = e, lam >= 0,
    // whose tableau has only n rows. The optimal z reappears as the simplex
    // multipliers, read off the artificial columns' reduced costs.
    const double osign = (sense == LPSense::maximize) ? 1.0 : -1.0;
    std::vector<double> e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = osign * c[j];

    Tableau tab(n, m + n);
    std::vector<double> sgn(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        sgn[i] = (e[i] < 0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < m; ++j) tab.at(i, j) = sgn[i] * A(j, i);
        tab.at(i, m + i) = 1.0;
        tab.rhs(i) = sgn[i] * e[i];
        tab.basis[i] = m + i;
    }

    LPSolution sol;
    std::vector<bool> allowed(m + n, true);

    // Phase 1: minimize the artificial total.
    for (std::size_t j = 0; j < m + n; ++j) tab.at(n, j) = (j >= m) ? 1.0 : 0.0;
    tab.rhs(n) = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m + n; ++j) tab.at(n, j) -= tab.at(i, j);
    if (!run_simplex(tab, allowed, sol.iterations))
        throw std::runtime_error("lp_solve_wide: phase-1 unbounded (internal error)");
    double scale = 1.0;
    for (double ei : e) scale = std::max(scale, std::abs(ei));
    if (-tab.rhs(n) > 1e-7 * scale) {
        // Dual infeasible; the (feasible) primal must be unbounded.
        sol.status = LPStatus::unbounded;
        return sol;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (tab.basis[i] < m) continue;
        std::size_t j = 0;
        for (; j < m; ++j)
            if (std::abs(tab.at(i, j)) > kPivotEps) break;
        if (j < m) tab.pivot(i, j);
    }
    for (std::size_t j = m; j < m + n; ++j) allowed[j] = false;

    // Phase 2: the dual objective b over the lambda columns.
    for (std::size_t j = 0; j < m + n; ++j) tab.at(n, j) = (j < m) ? b[j] : 0.0;
    tab.rhs(n) = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cb = (tab.basis[i] < m) ? b[tab.basis[i]] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= m + n; ++j) tab.at(n, j) -= cb * tab.at(i, j);
    }
    if (!run_simplex(tab, allowed, sol.iterations)) {
        sol.status = LPStatus::infeasible;  // dual unbounded
        return sol;
    }

    // z_i = sgn_i * (multiplier of equality row i); the artificial column's
    // reduced cost is its negation.
    sol.primal.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) sol.primal[i] = -sgn[i] * tab.at(n, m + i);
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.primal[j];
    sol.status = LPStatus::optimal;
    return sol;
}

}  // namespace polyineq
