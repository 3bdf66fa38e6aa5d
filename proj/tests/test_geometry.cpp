#include <stdexcept>
#include <cmath>

#include "carousel/geometry.hpp"
#include "carousel/rng.hpp"
#include "doctest.h"

using namespace carousel;

TEST_CASE("support function") {
    Circle unit_disc{{0, 0}, 1};
    for (double theta : {0.0, 0.7, 2.0, 4.5}) {
        CHECK(support(unit_disc, theta) == doctest::Approx(1.0));
    }
    Circle pt{{3, 4}, 0};
    CHECK(support(pt, 0.0) == doctest::Approx(3.0));
    Circle off{{2, 0}, 1};
    CHECK(support(off, 3.14159265358979) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("tangent_points") {
    Circle c{{2, 0}, 1};
    auto [t1, t2] = tangent_points({0, 0}, c);
    CHECK(t1.x == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(t1.y == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(t2.x == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(t2.y == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-12));

    // defining equations, fuzzed
    std::mt19937_64 rng(5);
    for (int round = 0; round < 2000; ++round) {
        Circle cc{{uniform(rng, -5, 5), uniform(rng, -5, 5)}, uniform(rng, 0, 2)};
        Point p{uniform(rng, -5, 5), uniform(rng, -5, 5)};
        if (dist(p, cc.c) <= cc.r + 1e-3) continue;
        auto [a, b] = tangent_points(p, cc);
        for (Point t : {a, b}) {
            CHECK(dist(t, cc.c) == doctest::Approx(cc.r).epsilon(1e-9));
            CHECK(std::abs(dot(p - t, t - cc.c)) < 1e-9 * (1 + dist(p, cc.c)));
        }
        // reflection across the x axis swaps the two touch points
        Circle mc{{cc.c.x, -cc.c.y}, cc.r};
        auto [ma, mb] = tangent_points({p.x, -p.y}, mc);
        CHECK(ma.x == doctest::Approx(b.x).epsilon(1e-9));
        CHECK(ma.y == doctest::Approx(-b.y).epsilon(1e-9));
        CHECK(mb.x == doctest::Approx(a.x).epsilon(1e-9));
        CHECK(mb.y == doctest::Approx(-a.y).epsilon(1e-9));
    }

    Circle dot_c{{1, 1}, 0};
    auto [d1, d2] = tangent_points({0, 0}, dot_c);
    CHECK(d1 == dot_c.c);
    CHECK(d2 == dot_c.c);

    CHECK_THROWS_AS(tangent_points({2, 0.5}, c), std::invalid_argument);
}

TEST_CASE("external_tangents") {
    Circle c1{{0, 0}, 1}, c2{{4, 0}, 1};
    auto lines = external_tangents(c1, c2);
    for (const auto& t : lines) {
        CHECK(std::abs(std::abs(t.touch1.y) - 1.0) < 1e-12);
        CHECK(t.touch1.y == doctest::Approx(t.touch2.y));
        // tangency distances
        CHECK(std::abs(line_side(t.line, c1.c)) == doctest::Approx(1.0));
        CHECK(std::abs(line_side(t.line, c2.c)) == doctest::Approx(1.0));
    }
    CHECK(lines[0].touch1.y * lines[1].touch1.y < 0);

    // two point-circles: the doubled line through both points
    Circle p1{{0, 0}, 0}, p2{{2, 1}, 0};
    auto plines = external_tangents(p1, p2);
    for (const auto& t : plines) {
        CHECK(std::abs(line_side(t.line, p1.c)) < 1e-12);
        CHECK(std::abs(line_side(t.line, p2.c)) < 1e-12);
    }

    // scale invariance
    std::mt19937_64 rng(9);
    for (int round = 0; round < 200; ++round) {
        Circle a{{uniform(rng, -2, 2), uniform(rng, -2, 2)}, uniform(rng, 0.1, 1)};
        Circle b{{uniform(rng, -2, 2), uniform(rng, -2, 2)}, uniform(rng, 0.1, 1)};
        if (dist(a.c, b.c) <= std::abs(a.r - b.r) + 1e-3) continue;
        double s = uniform(rng, 0.5, 3);
        auto base = external_tangents(a, b);
        auto scaled = external_tangents({a.c * s, a.r * s}, {b.c * s, b.r * s});
        for (int i = 0; i < 2; ++i) {
            CHECK(scaled[i].touch1.x == doctest::Approx(base[i].touch1.x * s).epsilon(1e-7));
            CHECK(scaled[i].touch1.y == doctest::Approx(base[i].touch1.y * s).epsilon(1e-7));
        }
    }

    CHECK_THROWS_AS(external_tangents({{0, 0}, 2}, {{0.5, 0}, 1}), std::invalid_argument);
}

TEST_CASE("triangle helpers") {
    Triangle t = Triangle::clockwise({0, 0}, {1, 0}, {0, 1});
    CHECK(t.signed_area() < 0);
    // never reflects: the vertex set is preserved
    CHECK(t.a == Point{0, 0});

    CHECK(point_in_triangle({0.25, 0.25}, t));
    CHECK_FALSE(point_in_triangle({1, 1}, t));
    CHECK(point_in_triangle({0, 0.5}, t));               // boundary is inside
    CHECK_FALSE(point_in_triangle({0, 0.5}, t, 1e-6));   // unless clearance demanded
    CHECK(point_in_triangle({-1e-9, 0.5}, t, -1e-6));    // inflated triangle

    CHECK(triangle_clearance({0.25, 0.25}, t) == doctest::Approx(0.25));
    CHECK_THROWS_AS(Triangle::clockwise({0, 0}, {1, 1}, {2, 2}), std::invalid_argument);
}
