#include "carousel/json_io.hpp"
#include "carousel/svg.hpp"
#include "doctest.h"

using namespace carousel;

TEST_CASE("geometry files: closed sets and implications") {
    Json by_sets = {
        {"elements", {"a", "b"}},
        {"closed_sets", {Json::array(), {"a"}, {"a", "b"}}},
    };
    ClosedFamily f = geometry_from_json(by_sets);
    CHECK(f.size() == 3);
    CHECK(f.contains(0));

    Json by_imps = {
        {"elements", {"a0", "a1", "a2", "x", "y"}},
        {"implications", {{{"lhs", {"a0", "a1", "a2"}}, {"rhs", {"x", "y"}}}}},
    };
    ClosedFamily g = geometry_from_json(by_imps);
    CHECK(g == counterexample_geometries().second);

    Json both = by_sets;
    both["implications"] = Json::array();
    CHECK_THROWS_AS(geometry_from_json(both), std::invalid_argument);
    Json neither = {{"elements", {"a"}}};
    CHECK_THROWS_AS(geometry_from_json(neither), std::invalid_argument);
    Json unknown = {{"elements", {"a"}}, {"closed_sets", {{"zz"}}}};
    CHECK_THROWS_AS(geometry_from_json(unknown), std::invalid_argument);

    // round trip
    CHECK(geometry_from_json(geometry_to_json(g)) == g);
}

TEST_CASE("scene files round-trip bit-exactly") {
    Scene scene;
    scene.tolerance = 1e-9;
    scene.triangle = Triangle{{0.123456789012345, 0.9}, {0.4, 0.001}, {0.99, 0.77}};
    scene.circles = {{"x", {{0.1, 0.2}, 0.05}}, {"y", {{1.0 / 3.0, 2.0 / 7.0}, 1e-4}}};
    Json j = scene_to_json(scene);
    Scene loaded = scene_from_json(j);
    CHECK(loaded.tolerance == scene.tolerance);
    REQUIRE(loaded.triangle.has_value());
    CHECK(loaded.triangle->a == scene.triangle->a);
    CHECK(loaded.circles.size() == scene.circles.size());
    for (std::size_t i = 0; i < scene.circles.size(); ++i) {
        CHECK(loaded.circles[i].first == scene.circles[i].first);
        CHECK(loaded.circles[i].second.c == scene.circles[i].second.c);
        CHECK(loaded.circles[i].second.r == scene.circles[i].second.r);
    }

    Json bad = j;
    bad["circles"][0]["r"] = -1.0;
    CHECK_THROWS_AS(scene_from_json(bad), std::invalid_argument);
}

TEST_CASE("class table export") {
    Json j = class_table_to_json();
    REQUIRE(j.contains("classes"));
    CHECK(j["classes"].size() == 38);
    CHECK(j["classes"][0]["class"] == "S1");
    CHECK(j["classes"][1]["members"] == Json({"C111", "C222"}));
    int realizable = 0;
    for (const auto& cls : j["classes"]) {
        if (cls["realizable"].get<bool>()) ++realizable;
    }
    CHECK(realizable == 20);
}

TEST_CASE("svg rendering") {
    Scene scene;
    scene.circles = {{"a", {{0.2, 0.2}, 0.1}},
                     {"b", {{0.8, 0.2}, 0.1}},
                     {"c", {{0.5, 0.8}, 0.08}}};
    std::string svg = render_scene_svg(scene, {true});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    for (const char* label : {">a<", ">b<", ">c<"}) {
        CHECK(svg.find(label) != std::string::npos);
    }
    // byte-identical re-render
    CHECK(render_scene_svg(scene, {true}) == svg);

    Scene point_scene;
    point_scene.circles = {{"p", {{0.5, 0.5}, 0}}};
    point_scene.triangle = Triangle{{0.1, 0.1}, {0.9, 0.1}, {0.5, 0.9}};
    std::string svg2 = render_scene_svg(point_scene);
    CHECK(svg2.find("<line") != std::string::npos);
}
