#include "polyineq/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polyineq {

using nlohmann::json;

bool Config::valid() const {
    return contain_tol > 0 && sphere_tol > 0 && angle_cells > 0 && multistart > 0 &&
           sphere_iter_cap > 0 && grid_resolution > 1 && boundary_samples > 0 && c_sweep >= 9 &&
           c_margin > 0 && support_cuts > 2 && ellipse_bisect_rel > 0 && ellipse_iter_cap > 0;
}

std::string Config::to_json() const {
    json j;
    j["contain_tol"] = contain_tol;
    j["sphere_tol"] = sphere_tol;
    j["angle_cells"] = angle_cells;
    j["multistart"] = multistart;
    j["sphere_iter_cap"] = sphere_iter_cap;
    j["grid_resolution"] = grid_resolution;
    j["boundary_samples"] = boundary_samples;
    j["c_sweep"] = c_sweep;
    j["c_margin"] = c_margin;
    j["support_cuts"] = support_cuts;
    j["ellipse_bisect_rel"] = ellipse_bisect_rel;
    j["ellipse_iter_cap"] = ellipse_iter_cap;
    j["seed"] = seed;
    return j.dump();
}

Config Config::from_json(const std::string& text) {
    json j = json::parse(text);
    Config c;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
    };
    get("contain_tol", c.contain_tol);
    get("sphere_tol", c.sphere_tol);
    get("angle_cells", c.angle_cells);
    get("multistart", c.multistart);
    get("sphere_iter_cap", c.sphere_iter_cap);
    get("grid_resolution", c.grid_resolution);
    get("boundary_samples", c.boundary_samples);
    get("c_sweep", c.c_sweep);
    get("c_margin", c.c_margin);
    get("support_cuts", c.support_cuts);
    get("ellipse_bisect_rel", c.ellipse_bisect_rel);
    get("ellipse_iter_cap", c.ellipse_iter_cap);
    get("seed", c.seed);
    if (!c.valid()) throw std::invalid_argument("config: field out of range");
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::uint64_t Config::hash() const {
    const std::string s = to_json();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace polyineq
