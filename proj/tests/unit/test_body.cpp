#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "polyineq/body.hpp"
#include "polyineq/body_io.hpp"
#include "polyineq/geometry.hpp"

using namespace polyineq;

TEST_CASE("body: validating constructors reject bad input") {
    CHECK_THROWS_AS(make_ball(Vec{0.0, 0.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_box(Vec{0.0, 0.0}, Vec{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_box(Vec{1.0, 0.0}, Vec{0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_simplex(0), std::invalid_argument);
    // Collinear generators do not affinely span the plane.
    CHECK_THROWS_AS(make_vpolytope({Vec{0.0, 0.0}, Vec{1.0, 1.0}, Vec{2.0, 2.0}}),
                    std::invalid_argument);
    // Half-plane: unbounded.
    CHECK_THROWS_AS(make_hpolytope({Vec{1.0, 0.0}}, {1.0}), std::invalid_argument);
}

TEST_CASE("body: containment on the standard catalogue") {
    auto tri = make_simplex(2);
    CHECK(contains(tri, Vec{0.2, 0.2}));
    CHECK(contains(tri, Vec{0.0, 0.0}));
    CHECK(!contains(tri, Vec{0.7, 0.7}));

    auto ball = make_ball(Vec{0.0, 0.0}, 1.0);
    CHECK(contains(ball, Vec{0.6, 0.6}));
    CHECK(!contains(ball, Vec{0.8, 0.8}));

    auto box = make_box(Vec{-1.0, -2.0}, Vec{1.0, 2.0});
    CHECK(contains(box, Vec{1.0, 2.0}));
    CHECK(!contains(box, Vec{1.1, 0.0}));
}

TEST_CASE("body: ray_chord on box and ball") {
    auto box = make_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0});
    auto ch = ray_chord(box, Vec{0.5, 0.0}, Vec{1.0, 0.0});
    CHECK(ch.rho_plus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ch.rho_minus == doctest::Approx(1.5).epsilon(1e-12));

    auto ball = make_ball(Vec{0.0, 0.0}, 2.0);
    auto cb = ray_chord(ball, Vec{0.0, 0.0}, Vec{0.0, 1.0});
    CHECK(cb.rho_plus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cb.rho_minus == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("body: hull2d strips interior and collinear points") {
    std::vector<Vec> pts = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0},
                            {0.5, 0.5}, {0.5, 0.0}};
    auto hull = hull2d(pts);
    CHECK(hull.size() == 4);
    double area2 = 0.0;  // shoelace, positive for counter-clockwise order
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        area2 += a[0] * b[1] - b[0] * a[1];
    }
    CHECK(area2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("body: to_hrep facets certify the vertices") {
    for (const auto& K : {make_simplex(2), make_box(Vec{-1.0, -0.5}, Vec{2.0, 1.0}),
                          make_vpolytope({Vec{0.0, 0.0}, Vec{2.0, 0.0}, Vec{1.0, 2.0},
                                          Vec{-1.0, 1.0}})}) {
        auto H = to_hrep(K);
        auto verts = polytope_vertices(K);
        for (const auto& nrm : H.normals) CHECK(norm2(nrm) == doctest::Approx(1.0).epsilon(1e-12));
        for (const auto& v : verts) {
            bool active = false;
            for (std::size_t i = 0; i < H.normals.size(); ++i) {
                double s = dot(H.normals[i], v);
                CHECK(s <= H.offsets[i] + 1e-9);
                active = active || s >= H.offsets[i] - 1e-9;
            }
            CHECK(active);  // every vertex lies on some facet
        }
    }
    CHECK_THROWS(to_hrep(make_ball(Vec{0.0, 0.0}, 1.0)));
}

TEST_CASE("body: polytope vertices of a box are its corners") {
    auto verts = polytope_vertices(make_box(Vec{-1.0, -1.0}, Vec{1.0, 1.0}));
    CHECK(verts.size() == 4);
    for (const auto& v : verts) {
        CHECK(std::abs(v[0]) == doctest::Approx(1.0));
        CHECK(std::abs(v[1]) == doctest::Approx(1.0));
    }
    CHECK(is_polytope(make_simplex(3)));
    CHECK(!is_polytope(make_ball(Vec{0.0}, 1.0)));
}

TEST_CASE("body: symmetry centers") {
    auto c1 = symmetry_center(make_ball(Vec{0.5, -0.5}, 2.0));
    REQUIRE(c1.has_value());
    CHECK((*c1)[0] == doctest::Approx(0.5));
    auto c2 = symmetry_center(make_box(Vec{0.0, 0.0}, Vec{2.0, 4.0}));
    REQUIRE(c2.has_value());
    CHECK((*c2)[1] == doctest::Approx(2.0));
    CHECK(!symmetry_center(make_simplex(2)).has_value());
}

TEST_CASE("body: central symmetrization preserves widths and chords") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (const auto& K : {make_simplex(2),
                          make_vpolytope({Vec{0.0, 0.0}, Vec{3.0, 1.0}, Vec{1.0, 2.0}})}) {
        auto C = central_symmetrization(K);
        auto center = symmetry_center(C);
        REQUIRE(center.has_value());
        for (int s = 0; s < 25; ++s) {
            Vec v = normalized(Vec{U(rng), U(rng)});
            CHECK(support(C, v) + support(C, -v) ==
                  doctest::Approx(support(K, v) + support(K, -v)).epsilon(1e-9));
            CHECK(maximal_chord(C, v) == doctest::Approx(maximal_chord(K, v)).epsilon(1e-9));
        }
    }
}

TEST_CASE("body: symmetrization of a d >= 3 simplex answers support queries") {
    auto C = central_symmetrization(make_simplex(3));
    auto K = make_simplex(3);
    Vec v = normalized(Vec{1.0, -2.0, 0.5});
    CHECK(support(C, v) + support(C, -v) ==
          doctest::Approx(support(K, v) + support(K, -v)).epsilon(1e-9));
}

TEST_CASE("body: JSON round trip") {
    for (const char* doc : {R"({"type":"simplex","dim":2})",
                            R"({"type":"ball","center":[0.5,0.5],"radius":2})",
                            R"({"type":"box","lower":[-1,-1],"upper":[1,1]})",
                            R"({"type":"vpolytope","vertices":[[0,0],[2,0],[1,3]]})"}) {
        auto K = load_body(doc);
        auto K2 = load_body(body_to_json(K));
        CHECK(K.dim() == K2.dim());
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        for (int s = 0; s < 10; ++s) {
            Vec v(K.dim());
            for (auto& t : v) t = U(rng);
            if (norm2(v) == 0.0) continue;
            CHECK(support(K, v) == doctest::Approx(support(K2, v)).epsilon(1e-12));
        }
    }
    CHECK_THROWS(load_body(R"({"type":"dodecahedron"})"));
    CHECK_THROWS(load_body("not json"));
}
