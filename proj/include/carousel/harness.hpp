#pragma once

// Seeded end-to-end verification campaigns tying the disc geometry to the
// combinatorics: the two main theorems, the five-element counterexample
// suite, the exhaustive small-geometry sweep, and the representation checks.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "carousel/closure.hpp"
#include "carousel/scene.hpp"
#include "carousel/triangle_config.hpp"

namespace carousel {

struct FuzzParams {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    double margin = 1e-3;     // generator separation margin (delta)
    double tolerance = 1e-9;  // predicate tolerance (epsilon)
};

struct FuzzReport {
    FuzzParams params;
    std::uint64_t trials_run = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected_degenerate = 0;
    std::vector<Scene> violations;
    std::map<int, std::uint64_t> class_histogram;  // class id -> count
};

// Sampled triangle with two circles inside (margin delta); the weak carousel
// property must produce a witness on every accepted trial.
FuzzReport fuzz_theorem1(const FuzzParams& params);

// Five-circle scenes with x, y accepted into ch_c({a,b,c}); the weak 2x3
// disjunction must hold on every accepted scene; trials is the number of
// accepted scenes to accumulate.
FuzzReport fuzz_theorem2(const FuzzParams& params);

// Scene generators behind the campaigns, exposed for the tests.
struct TriangleScene {
    Triangle tri;
    Circle x, y;
};
TriangleScene sample_triangle_scene(std::mt19937_64& rng, double delta);
// Same, but x and y share a tangent line through a vertex (coincident
// projection endpoints). side selects which of the two tangents from the
// vertex is shared; opposite places y across the common tangent from x.
TriangleScene sample_coincident_tangent_scene(std::mt19937_64& rng, double delta,
                                              bool opposite);

struct CounterexampleSuiteReport {
    bool pass = false;
    bool g_is_convex_geometry = false;
    bool g_weak2x3_fails_with_expected_witness = false;
    bool g_2carousel_fails = false;
    bool gprime_weak2x3_holds = false;
    bool gprime_2carousel_holds = false;
    bool g_matches_single_implication = false;
    ConvexDimensionResult cdim;
    std::string detail;
};
CounterexampleSuiteReport counterexample_suite(
    std::chrono::milliseconds cdim_budget = std::chrono::minutes(30));

struct SweepReport {
    int n = 0;
    std::uint64_t geometries = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
};
// Every convex geometry on n <= 4 elements satisfies the weak 2x3 rule.
SweepReport small_geometry_sweep(int n);

struct RepresentationReport {
    bool pass = false;
    // (i) a two-circles-in-a-triangle scene whose five-object alignment
    // satisfies the weak 2x3 rule but fails the 2-carousel rule
    std::optional<Scene> carousel_gap_scene;
    bool gap_weak2x3_holds = false;
    bool gap_2carousel_fails = false;
    // (ii) a four-circle scene strongly isomorphic to the ab -> xy geometry
    std::optional<Scene> implication_scene;
    bool implication_isomorphic = false;
    bool budget_exhausted = false;
    std::string detail;
};
RepresentationReport representation_checks(std::uint64_t budget, std::uint64_t seed);

}  // namespace carousel
