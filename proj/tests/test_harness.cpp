#include "carousel/harness.hpp"
#include "carousel/json_io.hpp"
#include "doctest.h"

using namespace carousel;

TEST_CASE("fuzz_theorem1 small campaign") {
    FuzzParams params{1000, 1, 1e-3, 1e-9};
    FuzzReport report = fuzz_theorem1(params);
    CHECK(report.trials_run == 1000);
    CHECK(report.accepted + report.rejected_degenerate == report.trials_run);
    CHECK(report.violations.empty());
    for (const auto& [cls, count] : report.class_histogram) {
        CHECK(ClassTable::instance().class_info(cls).realizable);
    }
    // deterministic reruns
    FuzzReport again = fuzz_theorem1(params);
    CHECK(fuzz_report_to_json(report) == fuzz_report_to_json(again));
}

TEST_CASE("fuzz_theorem2 small campaign") {
    FuzzParams params{200, 7, 1e-3, 1e-9};
    FuzzReport report = fuzz_theorem2(params);
    CHECK(report.accepted == 200);
    CHECK(report.accepted + report.rejected_degenerate == report.trials_run);
    CHECK(report.violations.empty());
    FuzzReport again = fuzz_theorem2(params);
    CHECK(fuzz_report_to_json(report) == fuzz_report_to_json(again));
}

TEST_CASE("theorem 2 containment shortcut scene") {
    // c inside the hull of a and b: the disjunction holds trivially through
    // the pair {a, b}
    Scene scene;
    scene.circles = {{"a", {{0, 0}, 1}},
                     {"b", {{6, 0}, 1}},
                     {"c", {{3, 0}, 0.4}},
                     {"x", {{2, 0}, 0.2}},
                     {"y", {{4, 0}, 0.2}}};
    const std::vector<Circle> gens{scene.circle("a"), scene.circle("b"), scene.circle("c")};
    CHECK(disc_in_hull(scene.circle("x"), gens));
    CHECK(disc_in_hull(scene.circle("y"), gens));
    const std::array<Circle, 3> with_x{scene.circle("x"), scene.circle("a"), scene.circle("b")};
    CHECK(disc_in_hull(scene.circle("y"), with_x));
}

TEST_CASE("counterexample suite") {
    auto report = counterexample_suite(std::chrono::minutes(5));
    CHECK(report.pass);
    CHECK(report.g_is_convex_geometry);
    CHECK(report.g_weak2x3_fails_with_expected_witness);
    CHECK(report.g_2carousel_fails);
    CHECK(report.gprime_weak2x3_holds);
    CHECK(report.gprime_2carousel_holds);
    CHECK(report.g_matches_single_implication);
    CHECK(report.cdim.k == 6);
    CHECK(report.cdim.exhaustive_below);
}

TEST_CASE("small geometry sweep") {
    SweepReport r1 = small_geometry_sweep(1);
    CHECK(r1.geometries == 1);
    CHECK(r1.failures == 0);
    SweepReport r2 = small_geometry_sweep(2);
    CHECK(r2.geometries == 3);
    CHECK(r2.failures == 0);
    SweepReport r3 = small_geometry_sweep(3);
    CHECK(r3.geometries == 22);
    CHECK(r3.failures == 0);
}

TEST_CASE("representation checks") {
    auto report = representation_checks(40000, 0x5151);
    CHECK(report.pass);
    REQUIRE(report.carousel_gap_scene.has_value());
    CHECK(report.gap_weak2x3_holds);
    CHECK(report.gap_2carousel_fails);

    // the quoted identity: x is in none of the three closures of y plus two
    // vertices
    const Scene& scene = *report.carousel_gap_scene;
    ClosedFamily family = scene_alignment(scene);
    const GroundSet& ground = family.ground();
    Mask x = bit(ground.index("x"));
    for (const char* u : {"A", "B"}) {
        for (const char* v : {"B", "C"}) {
            if (std::string(u) == v) continue;
            Mask base = bit(ground.index("y")) | bit(ground.index(u)) | bit(ground.index(v));
            CHECK((family.closure(base) & x) == 0);
        }
    }

    REQUIRE(report.implication_scene.has_value());
    CHECK(report.implication_isomorphic);
}

TEST_CASE("violation scenes round-trip through their files") {
    std::mt19937_64 rng(0x99);
    for (int round = 0; round < 50; ++round) {
        TriangleScene ts = sample_triangle_scene(rng, 1e-3);
        Scene scene;
        scene.tolerance = 1e-9;
        scene.triangle = ts.tri;
        scene.circles = {{"x", ts.x}, {"y", ts.y}};
        Json j = scene_to_json(scene);
        Scene loaded = scene_from_json(j);
        auto v1 = weak_carousel_triangle(scene.circle("x"), scene.circle("y"), *scene.triangle);
        auto v2 = weak_carousel_triangle(loaded.circle("x"), loaded.circle("y"), *loaded.triangle);
        CHECK(v1.holds == v2.holds);
        REQUIRE(v1.witness.has_value());
        REQUIRE(v2.witness.has_value());
        CHECK(v1.witness->x_inside == v2.witness->x_inside);
        CHECK(v1.witness->u == v2.witness->u);
        CHECK(v1.witness->v == v2.witness->v);
    }
}
