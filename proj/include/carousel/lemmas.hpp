#pragma once

// Executable forms of the supporting geometric lemmas. Each instance is a
// scene satisfying a lemma's hypotheses; the check evaluates its conclusion.

#include <array>
#include <random>
#include <variant>

#include "carousel/geometry.hpp"
#include "carousel/scene.hpp"

namespace carousel {

// An angle smaller than pi at an apex, between two unit direction rays.
struct Wedge {
    Point apex;
    Point dir1, dir2;

    bool contains(Point p, double margin = 0.0) const;
    bool contains_disc(const Circle& c, double margin = 0.0) const;
};

// Circle tangent to both rays, center on the bisector at the given distance.
Circle inscribe_in_wedge(const Wedge& w, double apex_distance);
// Tangency points of an inscribed circle on the two rays.
std::pair<Point, Point> wedge_touch_points(const Wedge& w, const Circle& inscribed);

enum class LemmaOutcome { Pass, Fail, Rejected };

// Circle p inscribed in the wedge; y inside the wedge with an interior point
// in the near-apex area w1. Conclusion: y lies in the hull of p and the apex.
struct HullAbsorptionInstance {
    Wedge wedge;
    Circle p;
    Circle y;
};
LemmaOutcome check_hull_absorption(const HullAbsorptionInstance& inst, double eps = 1e-9);

// p inscribed in the angle at the first triangle vertex; no circle inside
// the triangle meets both the near-apex area w1 and the remainder w2.
struct DisjointAreasInstance {
    Triangle tri;
    Circle p;
    Circle y;
};
LemmaOutcome check_disjoint_areas(const DisjointAreasInstance& inst, double eps = 1e-9);

// Tangents at a border point of each of the two areas an inscribed circle
// cuts from the wedge meet outside the wedge interior.
struct TangentMeetInstance {
    Wedge wedge;
    Circle s;
    double near_angle;  // circle angle of the tangency on the near-apex arc
    double far_angle;   // circle angle of the tangency on the far arc
};
LemmaOutcome check_tangent_meet(const TangentMeetInstance& inst, double eps = 1e-9);

// The cusp area between circle x and the meet point n of its two B-side
// tangents lies inside the hull of x and vertex B; checked on sampled points.
struct CuspCoverInstance {
    Triangle tri;
    Circle x;
};
LemmaOutcome check_cusp_cover(const CuspCoverInstance& inst, double eps = 1e-9,
                              int samples = 1000);

// With y inside triangle(A, C, N), each of four projection-endpoint
// comparisons forces y into ch_c(x, A, C).
struct EndpointConditionsInstance {
    Triangle tri;
    Circle x;
    Circle y;
};
struct EndpointConditionsReport {
    LemmaOutcome outcome = LemmaOutcome::Rejected;
    std::array<bool, 4> holds{};  // conditions (1)..(4)
};
EndpointConditionsReport check_endpoint_conditions(const EndpointConditionsInstance& inst,
                                                   double eps = 1e-9, double delta = 1e-3);

using LemmaInstance = std::variant<HullAbsorptionInstance, DisjointAreasInstance,
                                   TangentMeetInstance, CuspCoverInstance,
                                   EndpointConditionsInstance>;
LemmaOutcome check_lemma(const LemmaInstance& inst, double eps = 1e-9);

// Hypothesis-satisfying samplers; delta is the separation margin that keeps
// instances clear of the ambiguity band.
HullAbsorptionInstance sample_hull_absorption(std::mt19937_64& rng, double delta = 1e-3);
DisjointAreasInstance sample_disjoint_areas(std::mt19937_64& rng, double delta = 1e-3);
TangentMeetInstance sample_tangent_meet(std::mt19937_64& rng, double delta = 1e-3);
CuspCoverInstance sample_cusp_cover(std::mt19937_64& rng, double delta = 1e-3);
EndpointConditionsInstance sample_endpoint_conditions(std::mt19937_64& rng,
                                                      double delta = 1e-3);

// True when a sampled interior point of the disc lies in the region with the
// given clearance from every region boundary.
bool disc_meets_region(const Region& reg, const Circle& c, double clearance,
                       int rings = 12, int spokes = 48);

}  // namespace carousel
