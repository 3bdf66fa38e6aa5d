#include "carousel/lemmas.hpp"
#include "carousel/rng.hpp"
#include "doctest.h"

using namespace carousel;

TEST_CASE("wedge utilities") {
    Wedge w{{0, 0}, {1, 0}, {0, 1}};
    CHECK(w.contains({0.5, 0.5}));
    CHECK_FALSE(w.contains({-0.5, 0.5}));
    Circle ins = inscribe_in_wedge(w, 1.0);
    CHECK(ins.r == doctest::Approx(std::sin(std::numbers::pi / 4)).epsilon(1e-12));
    auto [q1, q2] = wedge_touch_points(w, ins);
    CHECK(q1.y == doctest::Approx(0.0));
    CHECK(q2.x == doctest::Approx(0.0));
    CHECK(dist(q1, ins.c) == doctest::Approx(ins.r));
}

TEST_CASE("hull absorption instances pass") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 500; ++round) {
        auto inst = sample_hull_absorption(rng);
        CHECK(check_hull_absorption(inst) == LemmaOutcome::Pass);
    }
}

TEST_CASE("disjoint areas instances pass, and the vacuous case") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 500; ++round) {
        auto inst = sample_disjoint_areas(rng);
        CHECK(check_disjoint_areas(inst) == LemmaOutcome::Pass);
    }
    // y equal to the inscribed circle meets neither area
    auto inst = sample_disjoint_areas(rng);
    inst.y = inst.p;
    CHECK(check_disjoint_areas(inst) == LemmaOutcome::Pass);
}

TEST_CASE("tangent meet instances pass") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 500; ++round) {
        auto inst = sample_tangent_meet(rng);
        CHECK(check_tangent_meet(inst) == LemmaOutcome::Pass);
    }
}

TEST_CASE("cusp cover instances pass") {
    std::mt19937_64 rng(24);
    for (int round = 0; round < 100; ++round) {
        auto inst = sample_cusp_cover(rng);
        CHECK(check_cusp_cover(inst, 1e-9, 200) == LemmaOutcome::Pass);
    }
}

TEST_CASE("endpoint conditions instances pass") {
    std::mt19937_64 rng(25);
    for (int round = 0; round < 300; ++round) {
        auto inst = sample_endpoint_conditions(rng);
        auto report = check_endpoint_conditions(inst);
        CHECK(report.outcome == LemmaOutcome::Pass);
        bool any = report.holds[0] || report.holds[1] || report.holds[2] || report.holds[3];
        CHECK(any);
    }
}

TEST_CASE("check_lemma dispatch") {
    std::mt19937_64 rng(26);
    CHECK(check_lemma(LemmaInstance{sample_hull_absorption(rng)}) == LemmaOutcome::Pass);
    CHECK(check_lemma(LemmaInstance{sample_tangent_meet(rng)}) == LemmaOutcome::Pass);
}
