#pragma once

// Named discs on the plane, the circle-closure operator ch_c, the alignment
// of a scene, and the corner/complement regions used by the lemma checks.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "carousel/closure.hpp"
#include "carousel/geometry.hpp"
#include "carousel/hull.hpp"

namespace carousel {

struct Scene {
    std::vector<std::pair<std::string, Circle>> circles;  // insertion order is element order
    double tolerance = 1e-9;
    std::optional<Triangle> triangle;

    int size() const { return static_cast<int>(circles.size()); }
    GroundSet ground() const;
    const Circle& circle(std::string_view name) const;
    std::vector<Circle> discs_of(Mask m) const;
    void validate() const;  // distinct names, positive tolerance, radii >= 0
};

// ch_c(Y) = { z : disc z inside the hull of the discs of Y }; ch_c({}) = {}.
Mask ch_c(const Scene& scene, Mask y);
std::vector<std::string> ch_c(const Scene& scene, std::span<const std::string> names);

// Family of all ch_c-closed subsets; scenes of at most 16 circles.
ClosedFamily scene_alignment(const Scene& scene);

enum class RegionKind { W1, W2, WN };

// W1/WN: the area between an apex and a circle, bounded by the two tangent
// segments from the apex and the near arc; stored as triangle(apex, touch1,
// touch2) minus the open disc. W2: the rest of an enclosing triangle outside
// the disc and outside the paired W1. Region boundaries count as inside
// except the open disc.
struct Region {
    RegionKind kind = RegionKind::W1;
    Point apex;
    Circle circle;
    Point touch1, touch2;
    std::optional<Triangle> enclosing;  // required for W2
};

// Builds the apex-vs-circle region; apex must be outside the closed disc.
Region corner_region(Point apex, const Circle& c, RegionKind kind = RegionKind::W1,
                     double eps = 1e-9);

// margin > 0 demands clearance from all region boundaries (and from the disc);
// margin < 0 inflates the region by |margin|.
bool region_contains(const Region& reg, Point p, double margin = 0.0);

// True when membership flips between margins +band and -band.
bool region_margin_ambiguous(const Region& reg, Point p, double band);

struct TangentTriangleResult {
    Triangle tri;                       // vertex a opposite... vertex k touches circle k's corner
    std::array<Region, 3> corners;      // w regions at tri.a, tri.b, tri.c
    std::array<TangentLine, 3> tangents;  // supporting tangents for pairs (a,b), (b,c), (c,a)
};

// Outer tangent triangle of three circles, each inscribed into one corner
// angle. Requires that no disc lies in the hull of the other two; returns
// nullopt on that or on degenerate (near-parallel tangents) input.
std::optional<TangentTriangleResult> tangent_triangle(const Circle& a, const Circle& b,
                                                      const Circle& c, double eps = 1e-9);

}  // namespace carousel
