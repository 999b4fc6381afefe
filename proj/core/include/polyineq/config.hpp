#pragma once

#include <cstdint>
#include <string>

namespace polyineq {

// Every numeric tolerance and search budget in one place. Defaults are the
// shipped desk-scale settings; serialized into every scan report.
struct Config {
    double contain_tol = 1e-9;       // geometric predicates
    double sphere_tol = 1e-10;       // convergence tolerance on t in sphere searches
    int angle_cells = 720;           // d = 2 coarse sweep resolution
    int multistart = 64;             // d >= 3 sphere search starts
    int sphere_iter_cap = 2000;      // per-start ascent/descent iterations
    int grid_resolution = 41;        // oracle lattice points per axis
    int boundary_samples = 64;       // oracle boundary samples per facet (d = 2)
    int c_sweep = 33;                // Bernstein oracle p(x) = c slices
    double c_margin = 1e-3;          // delta-margin keeping |c| < 1
    int support_cuts = 256;          // H-approximation cuts for smooth bodies (d = 2)
    double ellipse_bisect_rel = 1e-7;  // bisection tolerance relative to b_hi
    int ellipse_iter_cap = 10000;    // feasibility subproblem iterations
    std::uint64_t seed = 20250823;

    bool valid() const;
    std::string to_json() const;
    static Config from_json(const std::string& text);
    static Config from_file(const std::string& path);
    // FNV-1a over the canonical serialization; stamped into reports.
    std::uint64_t hash() const;
};

}  // namespace polyineq
