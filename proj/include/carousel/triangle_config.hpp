#pragma once

// Classification of two circles inside a triangle by the interleaving of
// their tangent projections on the three sides: side codes 1..6, the 216
// configuration codes, their 38 isomorphism classes, realization search, and
// the geometric weak-carousel check over triangle vertices.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "carousel/closure.hpp"
#include "carousel/geometry.hpp"
#include "carousel/scene.hpp"

namespace carousel {

enum class Side { AB = 0, BC = 1, CA = 2 };

// Projection interval of one circle on one side, as parameters along the
// clockwise walk of that side (0 at the first vertex, 1 at the second).
struct SideSpan {
    double lo = 0.0;
    double hi = 0.0;
};

// Both circles' projection endpoints on one side. x1/x2 and y1/y2 are the
// first/second endpoints met on the clockwise walk.
struct SideProjection {
    Side side = Side::AB;
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
};

// Side code semantics, fixed by three constraints the text imposes on the
// interleaving patterns (see the tests pinning them):
//   1: y entirely before x          y1 < y2 < x1 < x2
//   2: x entirely before y          x1 < x2 < y1 < y2
//   3: y nested inside x            x1 < y1 < y2 < x2
//   4: x nested inside y            y1 < x1 < x2 < y2
//   5: overlap, y leading           y1 < x1 < y2 < x2
//   6: overlap, x leading           x1 < y1 < x2 < y2
using SideCode = int;

struct ConfigCode {
    int j = 0, k = 0, l = 0;  // codes on AB, BC, CA

    int as_int() const { return j * 100 + k * 10 + l; }
    static ConfigCode from_int(int v) { return {v / 100, (v / 10) % 10, v % 10}; }
    bool operator==(const ConfigCode&) const = default;
};

// Tangent projections of a circle onto the three sides, from the opposite
// vertices. The circle must be strictly inside (clearance > r + eps from
// every side line).
std::array<SideSpan, 3> project(const Triangle& tri, const Circle& c, double eps = 1e-9);

// nullopt when any of the four endpoints coincide within eps.
std::optional<SideCode> side_code(const SideProjection& proj, double eps = 1e-9);

// Assembles the three side projections of two circles.
std::array<SideProjection, 3> side_projections(const Triangle& tri, const Circle& x,
                                               const Circle& y, double eps = 1e-9);

// nullopt when some side is degenerate (coincident endpoints within eps).
std::optional<ConfigCode> config_code(const Triangle& tri, const Circle& x, const Circle& y,
                                      double eps = 1e-9);
std::optional<ConfigCode> config_code(const std::array<SideProjection, 3>& projections,
                                      double eps = 1e-9);

// code transforms: clockwise side rotation and circle swap
ConfigCode rotate_code(const ConfigCode& c);
ConfigCode swap_code(const ConfigCode& c);

struct ClassInfo {
    int id = 0;  // 1..38
    std::vector<int> members;  // codes as jkl integers, fixture order
    bool realizable = false;
};

class ClassTable {
public:
    static const ClassTable& instance();  // verifies fixture against the computed orbits

    const std::vector<ClassInfo>& classes() const { return classes_; }
    const ClassInfo& class_info(int id) const { return classes_.at(static_cast<std::size_t>(id - 1)); }
    int class_of(const ConfigCode& code) const;
    int class_of(int code_as_int) const;

private:
    ClassTable();
    std::vector<ClassInfo> classes_;
    std::array<int, 667> class_by_code_{};  // indexed by jkl integer
};

struct Realization {
    Triangle tri;
    Circle x, y;
    ConfigCode code;
};

// Randomized search for a two-circle placement whose configuration falls in
// the class; returns nullopt when the budget is exhausted (the expected
// outcome for dismissed classes).
std::optional<Realization> search_realization(int class_id, std::uint64_t budget,
                                              std::uint64_t seed, double delta = 1e-3);

struct TriangleCarouselWitness {
    bool x_inside = false;  // true: x in ch_c({y,U,V}); false: y in ch_c({x,U,V})
    int u = 0, v = 0;       // vertex indices 0=A,1=B,2=C
};

struct TriangleCarouselVerdict {
    bool holds = false;
    std::optional<TriangleCarouselWitness> witness;
};

// Tests the six alternatives of the weak carousel property for a triangle of
// point-vertices: some pair {U,V} of vertices with x in ch_c({y,U,V}) or y in
// ch_c({x,U,V}). Both discs must lie in the hull of the vertices.
TriangleCarouselVerdict weak_carousel_triangle(const Circle& x, const Circle& y,
                                               const Triangle& tri, double eps = 1e-9);

// The two B-side tangents to x (from A, cutting BC nearest B; from C, cutting
// AB nearest B) and their intersection point N.
struct BSideTangents {
    Line from_a;  // touches x, hits BC at the endpoint nearest B
    Line from_c;  // touches x, hits AB at the endpoint nearest B
    Point n;
};
std::optional<BSideTangents> b_side_tangents(const Triangle& tri, const Circle& x,
                                             double eps = 1e-9);

enum class AcnOutcome { Pass, Fail, Rejected };

// For configurations with j in {1,3,5} and k in {2,3,6}, circle y must lie
// inside triangle(A, C, N).
AcnOutcome check_acn_containment(const Triangle& tri, const Circle& x, const Circle& y,
                                 double eps = 1e-9);

}  // namespace carousel
