#include "polyineq/body_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polyineq {

namespace {

using nlohmann::json;

Vec to_vec(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("body schema: expected number array");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number()) throw std::invalid_argument("body schema: expected number array");
        v.push_back(x.get<double>());
    }
    return v;
}

std::vector<Vec> to_vecs(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("body schema: expected array of arrays");
    std::vector<Vec> out;
    for (const auto& row : j) out.push_back(to_vec(row));
    return out;
}

json vec_json(const Vec& v) { return json(v); }

}  // namespace

ConvexBody load_body(const std::string& document) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("body schema: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw std::invalid_argument("body schema: missing \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "hpolytope") {
        if (!j.contains("normals") || !j.contains("offsets"))
            throw std::invalid_argument("body schema: hpolytope needs normals and offsets");
        std::vector<double> offsets;
        for (const auto& x : j["offsets"]) offsets.push_back(x.get<double>());
        return make_hpolytope(to_vecs(j["normals"]), offsets);
    }
    if (type == "vpolytope") {
        if (!j.contains("vertices")) throw std::invalid_argument("body schema: vpolytope needs vertices");
        return make_vpolytope(to_vecs(j["vertices"]));
    }
    if (type == "ball") {
        if (!j.contains("center") || !j.contains("radius"))
            throw std::invalid_argument("body schema: ball needs center and radius");
        return make_ball(to_vec(j["center"]), j["radius"].get<double>());
    }
    if (type == "box") {
        if (!j.contains("lower") || !j.contains("upper"))
            throw std::invalid_argument("body schema: box needs lower and upper");
        return make_box(to_vec(j["lower"]), to_vec(j["upper"]));
    }
    if (type == "simplex") {
        if (!j.contains("dim")) throw std::invalid_argument("body schema: simplex needs dim");
        return make_simplex(j["dim"].get<int>());
    }
    throw std::invalid_argument("body schema: unknown type \"" + type + "\"");
}

ConvexBody load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open body file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_body(ss.str());
}

std::string body_to_json(const ConvexBody& K) {
    json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HPolytope>) {
                j["type"] = "hpolytope";
                json normals = json::array();
                for (const auto& n : v.normals) normals.push_back(vec_json(n));
                j["normals"] = normals;
                j["offsets"] = v.offsets;
            } else if constexpr (std::is_same_v<T, VPolytope>) {
                j["type"] = "vpolytope";
                json verts = json::array();
                for (const auto& p : v.vertices) verts.push_back(vec_json(p));
                j["vertices"] = verts;
            } else if constexpr (std::is_same_v<T, Ball>) {
                j["type"] = "ball";
                j["center"] = vec_json(v.center);
                j["radius"] = v.radius;
            } else if constexpr (std::is_same_v<T, Box>) {
                j["type"] = "box";
                j["lower"] = vec_json(v.lower);
                j["upper"] = vec_json(v.upper);
            } else if constexpr (std::is_same_v<T, StandardSimplex>) {
                j["type"] = "simplex";
                j["dim"] = v.dim;
            } else {
                j["type"] = "symmetrized";
                j["inner"] = json::parse(body_to_json(*v.inner));
            }
        },
        K.rep);
    return j.dump();
}

std::string body_description(const ConvexBody& K) {
    std::ostringstream ss;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HPolytope>) ss << "hpolytope(" << v.normals.size() << " facets, d=" << K.dim() << ")";
            else if constexpr (std::is_same_v<T, VPolytope>) ss << "vpolytope(" << v.vertices.size() << " vertices, d=" << K.dim() << ")";
            else if constexpr (std::is_same_v<T, Ball>) ss << "ball(r=" << v.radius << ", d=" << K.dim() << ")";
            else if constexpr (std::is_same_v<T, Box>) ss << "box(d=" << K.dim() << ")";
            else if constexpr (std::is_same_v<T, StandardSimplex>) ss << "simplex(d=" << v.dim << ")";
            else ss << "symmetrized(" << body_description(*v.inner) << ")";
        },
        K.rep);
    return ss.str();
}

}  // namespace polyineq
