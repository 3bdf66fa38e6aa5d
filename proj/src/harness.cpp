#include "carousel/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "carousel/rng.hpp"
#include "carousel/sampling.hpp"

namespace carousel {

TriangleScene sample_triangle_scene(std::mt19937_64& rng, double delta) {
    Triangle tri = sample_triangle(rng);
    Circle x = sample_circle_in_triangle(rng, tri, delta);
    Circle y = sample_circle_in_triangle(rng, tri, delta);
    return {tri, x, y};
}

TriangleScene sample_coincident_tangent_scene(std::mt19937_64& rng, double delta,
                                              bool opposite) {
    for (;;) {
        Triangle tri = sample_triangle(rng);
        Circle x = sample_circle_in_triangle(rng, tri, delta, 5e-3);
        // shared tangent line from vertex A
        auto [t1, t2] = tangent_points(tri.a, x);
        Point touch = (rng() & 1) ? t1 : t2;
        Line tangent{tri.a, touch - tri.a};
        Point n = normalized(perp(tangent.dir));
        double side = line_side(tangent, x.c) >= 0 ? 1.0 : -1.0;
        double sgn = opposite ? -side : side;
        bool placed = false;
        for (int attempt = 0; attempt < 60 && !placed; ++attempt) {
            double along = uniform(rng, 0.1, 1.5);
            double ry = uniform(rng, 2 * delta, 0.2);
            Point c = tri.a + along * normalized(tangent.dir) + (sgn * ry) * n;
            Circle y{c, ry};
            if (triangle_clearance(y.c, tri) < y.r + delta) continue;
            return {tri, x, y};
        }
    }
}

namespace {

Scene triangle_scene_to_scene(const TriangleScene& ts, double tolerance) {
    Scene scene;
    scene.tolerance = tolerance;
    scene.triangle = ts.tri;
    scene.circles.emplace_back("x", ts.x);
    scene.circles.emplace_back("y", ts.y);
    return scene;
}

}  // namespace

FuzzReport fuzz_theorem1(const FuzzParams& params) {
    FuzzReport report;
    report.params = params;
    const ClassTable& table = ClassTable::instance();
    for (std::uint64_t trial = 0; trial < params.trials; ++trial) {
        auto rng = trial_rng(params.seed, trial);
        TriangleScene ts = sample_triangle_scene(rng, params.margin);
        ++report.trials_run;
        auto code = config_code(ts.tri, ts.x, ts.y, params.tolerance);
        if (!code) {
            ++report.rejected_degenerate;
            continue;
        }
        ++report.accepted;
        report.class_histogram[table.class_of(*code)]++;
        auto verdict = weak_carousel_triangle(ts.x, ts.y, ts.tri, params.tolerance);
        if (!verdict.holds) {
            report.violations.push_back(triangle_scene_to_scene(ts, params.tolerance));
        }
    }
    return report;
}

FuzzReport fuzz_theorem2(const FuzzParams& params) {
    FuzzReport report;
    report.params = params;
    const std::uint64_t max_trials = params.trials * 200;
    std::uint64_t trial = 0;
    while (report.accepted < params.trials && trial < max_trials) {
        auto rng = trial_rng(params.seed, trial);
        ++trial;
        ++report.trials_run;

        Circle a{{uniform(rng, 0, 1), uniform(rng, 0, 1)}, uniform(rng, 0.05, 0.3)};
        Circle b{{uniform(rng, 0, 1), uniform(rng, 0, 1)}, uniform(rng, 0.05, 0.3)};
        Circle c{{uniform(rng, 0, 1), uniform(rng, 0, 1)}, uniform(rng, 0.05, 0.3)};
        // x, y centers inside the hull of the three centers, radii by local
        // slack; membership is still verified exactly below
        auto sample_small = [&]() {
            double u = uniform(rng, 0, 1), v = uniform(rng, 0, 1);
            if (u + v > 1) {
                u = 1 - u;
                v = 1 - v;
            }
            Point p = a.c + u * (b.c - a.c) + v * (c.c - a.c);
            return Circle{p, uniform(rng, 0.0, 0.15)};
        };
        Circle x = sample_small();
        Circle y = sample_small();

        const std::array<Circle, 3> gens{a, b, c};
        if (!disc_in_hull(x, gens, -params.margin) || !disc_in_hull(y, gens, -params.margin)) {
            ++report.rejected_degenerate;
            continue;
        }
        ++report.accepted;

        bool holds = false;
        const Circle* elems[3] = {&a, &b, &c};
        for (int u = 0; u < 3 && !holds; ++u) {
            for (int v = u + 1; v < 3 && !holds; ++v) {
                std::array<Circle, 3> with_y{y, *elems[u], *elems[v]};
                std::array<Circle, 3> with_x{x, *elems[u], *elems[v]};
                if (disc_in_hull(x, with_y, params.tolerance) ||
                    disc_in_hull(y, with_x, params.tolerance)) {
                    holds = true;
                }
            }
        }

        // tangent-triangle decomposition, probed on sample points
        bool decomposition_ok = true;
        if (auto tt = tangent_triangle(a, b, c, params.tolerance)) {
            auto probe_rng = trial_rng(params.seed ^ 0x5eedULL, trial);
            for (int probe = 0; probe < 32; ++probe) {
                Point p = sample_point_in_triangle(probe_rng, tt->tri);
                Circle pc{p, 0.0};
                if (hull_margin_ambiguous(pc, gens, 1e-6)) continue;
                bool in_hull = disc_in_hull(pc, gens, params.tolerance);
                bool near_region = false;
                bool in_region = false;
                for (const Region& reg : tt->corners) {
                    if (region_margin_ambiguous(reg, p, 1e-6)) near_region = true;
                    if (region_contains(reg, p)) in_region = true;
                }
                if (near_region) continue;
                bool by_decomposition = point_in_triangle(p, tt->tri) && !in_region;
                if (in_hull != by_decomposition) {
                    decomposition_ok = false;
                    break;
                }
            }
        }

        if (!holds || !decomposition_ok) {
            Scene scene;
            scene.tolerance = params.tolerance;
            scene.circles = {{"a", a}, {"b", b}, {"c", c}, {"x", x}, {"y", y}};
            report.violations.push_back(std::move(scene));
        }
    }
    return report;
}

CounterexampleSuiteReport counterexample_suite(std::chrono::milliseconds cdim_budget) {
    CounterexampleSuiteReport report;
    auto [gprime, g] = counterexample_geometries();
    const GroundSet& ground = g.ground();

    report.g_is_convex_geometry = verify_axioms(g, AxiomMode::Alignment).pass &&
                                  verify_axioms(g, AxiomMode::ConvexGeometry).pass &&
                                  verify_axioms(g, AxiomMode::AntiExchange).pass;

    const Mask expected_s = ground.mask_of(std::vector<std::string>{"a0", "a1", "a2"});
    const int xi = ground.index("x");
    const int yi = ground.index("y");

    auto weak = carousel_check(g, CarouselRule::Weak2x3);
    report.g_weak2x3_fails_with_expected_witness =
        !weak.holds && weak.counterexample && weak.counterexample->s == expected_s &&
        ((weak.counterexample->x == xi && weak.counterexample->y == yi) ||
         (weak.counterexample->x == yi && weak.counterexample->y == xi));

    auto strict = carousel_check(g, CarouselRule::Carousel, 2);
    report.g_2carousel_fails = !strict.holds;

    report.gprime_weak2x3_holds = carousel_check(gprime, CarouselRule::Weak2x3).holds;
    report.gprime_2carousel_holds = carousel_check(gprime, CarouselRule::Carousel, 2).holds;

    std::vector<Implication> imps{{expected_s, static_cast<Mask>(bit(xi) | bit(yi))}};
    report.g_matches_single_implication =
        closure_from_implications(ground, imps).family() == g;

    report.cdim = convex_dimension(g, 7, cdim_budget);

    report.pass = report.g_is_convex_geometry && report.g_weak2x3_fails_with_expected_witness &&
                  report.g_2carousel_fails && report.gprime_weak2x3_holds &&
                  report.gprime_2carousel_holds && report.g_matches_single_implication &&
                  report.cdim.k == 6 && report.cdim.exhaustive_below;
    if (!report.pass) {
        report.detail = "counterexample suite assertion failed";
    }
    return report;
}

SweepReport small_geometry_sweep(int n) {
    SweepReport report;
    report.n = n;
    for (const ClosedFamily& g : enumerate_convex_geometries(n)) {
        ++report.geometries;
        auto verdict = carousel_check(g, CarouselRule::Weak2x3);
        if (!verdict.holds) {
            ++report.failures;
            if (report.first_failure.empty() && verdict.counterexample) {
                report.first_failure = "geometry #" + std::to_string(report.geometries) +
                                       " fails on S=" +
                                       g.ground().format(verdict.counterexample->s);
            }
        }
    }
    return report;
}

namespace {

// ch_c-geometry of an S3-class realization together with the triangle
// vertices as point-circles.
Scene gap_candidate_scene(const Realization& real, double tolerance) {
    Scene scene;
    scene.tolerance = tolerance;
    scene.triangle = real.tri;
    scene.circles = {{"x", real.x},
                     {"y", real.y},
                     {"A", Circle{real.tri.a, 0.0}},
                     {"B", Circle{real.tri.b, 0.0}},
                     {"C", Circle{real.tri.c, 0.0}}};
    return scene;
}

}  // namespace

RepresentationReport representation_checks(std::uint64_t budget, std::uint64_t seed) {
    RepresentationReport report;

    // (i) weak 2x3 holds but the 2-carousel rule fails on an S3 scene
    for (std::uint64_t round = 0; round < 64 && !report.carousel_gap_scene; ++round) {
        auto real = search_realization(3, budget / 16, splitmix64(seed) + round);
        if (!real) continue;
        Scene scene = gap_candidate_scene(*real, 1e-9);
        ClosedFamily family = scene_alignment(scene);
        bool weak_ok = carousel_check(family, CarouselRule::Weak2x3).holds;
        bool strict_fails = !carousel_check(family, CarouselRule::Carousel, 2).holds;
        if (weak_ok && strict_fails) {
            report.carousel_gap_scene = scene;
            report.gap_weak2x3_holds = weak_ok;
            report.gap_2carousel_fails = strict_fails;
        }
    }

    // (ii) four collinear circles realizing the ab -> xy geometry
    GroundSet target_ground(std::vector<std::string>{"a", "b", "x", "y"});
    std::vector<Implication> imps{
        {target_ground.mask_of(std::vector<std::string>{"a", "b"}),
         target_ground.mask_of(std::vector<std::string>{"x", "y"})}};
    ClosedFamily target = closure_from_implications(target_ground, imps).family();

    for (std::uint64_t trial = 0; trial < budget && !report.implication_scene; ++trial) {
        auto rng = trial_rng(seed ^ 0xab12, trial);
        double ra = uniform(rng, 0.5, 1.5);
        double rb = uniform(rng, 0.5, 1.5);
        double gap = uniform(rng, 4.0, 10.0);
        Circle a{{0, 0}, ra};
        Circle b{{gap, 0}, rb};
        double r_small = uniform(rng, 0.02, 0.2);
        double lo = ra + r_small + 0.05, hi = gap - rb - r_small - 0.05;
        if (lo >= hi) continue;
        double px = uniform(rng, lo, hi);
        double py = uniform(rng, lo, hi);
        Circle x{{std::min(px, py), 0}, r_small};
        Circle y{{std::max(px, py), 0}, r_small};
        if (std::abs(px - py) < 3 * r_small) continue;

        Scene scene;
        scene.tolerance = 1e-9;
        scene.circles = {{"a", a}, {"b", b}, {"x", x}, {"y", y}};
        ClosedFamily family = scene_alignment(scene);
        if (family.sets().size() != target.sets().size()) continue;
        auto embed = embedding_search(family, target, EmbeddingMode::Strong, 200000);
        if (embed.status == EmbeddingResult::Status::Found) {
            report.implication_scene = scene;
            report.implication_isomorphic = true;
        }
    }

    report.pass = report.carousel_gap_scene.has_value() && report.implication_scene.has_value();
    if (!report.pass) {
        report.budget_exhausted = true;
        report.detail = "search budget exhausted before both witnesses were found";
    }
    return report;
}

}  // namespace carousel
