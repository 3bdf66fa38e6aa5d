#include "carousel/lemmas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "carousel/rng.hpp"
#include "carousel/sampling.hpp"
#include "carousel/triangle_config.hpp"

namespace carousel {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wedge_sign(const Wedge& w) { return cross(w.dir1, w.dir2) >= 0 ? 1.0 : -1.0; }

// Signed distances of p from the two boundary rays, positive toward the interior.
std::pair<double, double> wedge_depths(const Wedge& w, Point p) {
    double s = wedge_sign(w);
    Point d = p - w.apex;
    return {s * cross(w.dir1, d), -s * cross(w.dir2, d)};
}

double angle_of(Point p) { return std::atan2(p.y, p.x); }

// Arc length from a to b going counterclockwise, in [0, 2pi).
double ccw_span(double a, double b) {
    double d = std::fmod(b - a, two_pi);
    if (d < 0) d += two_pi;
    return d;
}

bool ccw_between(double a, double phi, double b, double margin) {
    double span = ccw_span(a, b);
    double off = ccw_span(a, phi);
    return off > margin && off < span - margin;
}

}  // namespace

bool Wedge::contains(Point p, double margin) const {
    auto [d1, d2] = wedge_depths(*this, p);
    return d1 >= margin && d2 >= margin;
}

bool Wedge::contains_disc(const Circle& c, double margin) const {
    auto [d1, d2] = wedge_depths(*this, c.c);
    return d1 >= c.r + margin && d2 >= c.r + margin;
}

Circle inscribe_in_wedge(const Wedge& w, double apex_distance) {
    Point bis = normalized(w.dir1 + w.dir2);
    Point center = w.apex + apex_distance * bis;
    double r = wedge_depths(w, center).first;
    return Circle{center, r};
}

std::pair<Point, Point> wedge_touch_points(const Wedge& w, const Circle& inscribed) {
    Point d = inscribed.c - w.apex;
    return {w.apex + dot(d, w.dir1) * w.dir1, w.apex + dot(d, w.dir2) * w.dir2};
}

bool disc_meets_region(const Region& reg, const Circle& c, double clearance, int rings,
                       int spokes) {
    // interior samples only: rings scaled to stay off the disc boundary
    Circle shrunk{c.c, c.r * static_cast<double>(rings) / (rings + 1)};
    for (Point q : disc_sample_points(shrunk, rings, spokes)) {
        if (region_contains(reg, q, clearance)) return true;
    }
    return false;
}

namespace {

bool inscribed_in_wedge(const Wedge& w, const Circle& c, double tol) {
    auto [d1, d2] = wedge_depths(w, c.c);
    return std::abs(d1 - c.r) <= tol && std::abs(d2 - c.r) <= tol;
}

}  // namespace

LemmaOutcome check_hull_absorption(const HullAbsorptionInstance& inst, double eps) {
    if (!inscribed_in_wedge(inst.wedge, inst.p, 1e-6)) return LemmaOutcome::Rejected;
    if (!inst.wedge.contains_disc(inst.y, -eps)) return LemmaOutcome::Rejected;
    Region w1 = corner_region(inst.wedge.apex, inst.p, RegionKind::W1, eps);
    if (!disc_meets_region(w1, inst.y, 1e-7)) return LemmaOutcome::Rejected;
    const std::array<Circle, 2> hull{inst.p, Circle{inst.wedge.apex, 0.0}};
    return disc_in_hull(inst.y, hull, eps) ? LemmaOutcome::Pass : LemmaOutcome::Fail;
}

LemmaOutcome check_disjoint_areas(const DisjointAreasInstance& inst, double eps) {
    Wedge w{inst.tri.a, normalized(inst.tri.b - inst.tri.a), normalized(inst.tri.c - inst.tri.a)};
    if (!inscribed_in_wedge(w, inst.p, 1e-6)) return LemmaOutcome::Rejected;
    if (triangle_clearance(inst.y.c, inst.tri) < inst.y.r - eps) return LemmaOutcome::Rejected;
    Region w1 = corner_region(inst.tri.a, inst.p, RegionKind::W1, eps);
    Region w2 = w1;
    w2.kind = RegionKind::W2;
    w2.enclosing = inst.tri;
    bool m1 = disc_meets_region(w1, inst.y, 1e-7);
    bool m2 = disc_meets_region(w2, inst.y, 1e-7);
    return (m1 && m2) ? LemmaOutcome::Fail : LemmaOutcome::Pass;
}

LemmaOutcome check_tangent_meet(const TangentMeetInstance& inst, double eps) {
    (void)eps;
    if (!inscribed_in_wedge(inst.wedge, inst.s, 1e-6)) return LemmaOutcome::Rejected;
    auto [q1, q2] = wedge_touch_points(inst.wedge, inst.s);
    double phi1 = angle_of(q1 - inst.s.c);
    double phi2 = angle_of(q2 - inst.s.c);
    double phi_apex = angle_of(inst.wedge.apex - inst.s.c);
    double lo = phi1, hi = phi2;
    if (!ccw_between(lo, phi_apex, hi, 0.0)) std::swap(lo, hi);
    // near arc is (lo, hi) counterclockwise; the far arc is the complement
    if (!ccw_between(lo, inst.near_angle, hi, 0.0)) return LemmaOutcome::Rejected;
    if (!ccw_between(hi, inst.far_angle, lo, 0.0)) return LemmaOutcome::Rejected;

    auto tangent_at = [&](double phi) {
        Point t = inst.s.c + inst.s.r * unit(phi);
        return Line{t, perp(unit(phi))};
    };
    Line tn = tangent_at(inst.near_angle);
    Line tf = tangent_at(inst.far_angle);
    auto o = intersect_lines(tn, tf, 1e-9);
    if (!o) return LemmaOutcome::Rejected;  // parallel tangents
    return inst.wedge.contains(*o, 1e-7) ? LemmaOutcome::Fail : LemmaOutcome::Pass;
}

LemmaOutcome check_cusp_cover(const CuspCoverInstance& inst, double eps, int samples) {
    if (triangle_clearance(inst.x.c, inst.tri) < inst.x.r + eps) return LemmaOutcome::Rejected;
    auto bt = b_side_tangents(inst.tri, inst.x, eps);
    if (!bt) return LemmaOutcome::Rejected;
    Region wn;
    try {
        wn = corner_region(bt->n, inst.x, RegionKind::WN, eps);
    } catch (const std::invalid_argument&) {
        return LemmaOutcome::Rejected;
    }
    Triangle cusp{wn.apex, wn.touch1, wn.touch2};
    const std::array<Circle, 2> hull{inst.x, Circle{inst.tri.b, 0.0}};
    std::mt19937_64 rng(0x77e0);  // fixed stream; instances provide the variety
    int kept = 0;
    for (int attempt = 0; attempt < samples * 50 && kept < samples; ++attempt) {
        Point q = sample_point_in_triangle(rng, cusp);
        if (!region_contains(wn, q, 1e-7)) continue;
        ++kept;
        if (!disc_in_hull(Circle{q, 0.0}, hull, eps)) return LemmaOutcome::Fail;
    }
    return LemmaOutcome::Pass;
}

EndpointConditionsReport check_endpoint_conditions(const EndpointConditionsInstance& inst,
                                                   double eps, double delta) {
    EndpointConditionsReport report;
    auto bt = b_side_tangents(inst.tri, inst.x, eps);
    if (!bt) return report;
    Triangle acn;
    try {
        acn = Triangle{inst.tri.a, inst.tri.c, bt->n};
    } catch (const std::invalid_argument&) {
        return report;
    }
    if (triangle_clearance(inst.y.c, acn) < inst.y.r - eps) return report;

    std::array<SideProjection, 3> proj;
    try {
        proj = side_projections(inst.tri, inst.x, inst.y, eps);
    } catch (const std::invalid_argument&) {
        return report;
    }
    const auto& ab = proj[0];
    const auto& bc = proj[1];
    const auto& ca = proj[2];
    report.holds = {
        ca.y1 < ca.x1 - eps,  // (1) y's CA endpoint nearer C
        ca.y2 > ca.x2 + eps,  // (2) y's CA endpoint nearer A
        bc.y2 > bc.x2 + eps,  // (3) y's BC endpoint nearer C
        ab.y1 < ab.x1 - eps,  // (4) y's AB endpoint nearer A
    };
    (void)delta;
    bool any = report.holds[0] || report.holds[1] || report.holds[2] || report.holds[3];
    if (!any) return report;  // vacuous, rejected
    const std::array<Circle, 3> hull{inst.x, Circle{inst.tri.a, 0.0}, Circle{inst.tri.c, 0.0}};
    report.outcome = disc_in_hull(inst.y, hull, eps) ? LemmaOutcome::Pass : LemmaOutcome::Fail;
    return report;
}

LemmaOutcome check_lemma(const LemmaInstance& inst, double eps) {
    return std::visit(
        [&](const auto& i) -> LemmaOutcome {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, EndpointConditionsInstance>) {
                return check_endpoint_conditions(i, eps).outcome;
            } else if constexpr (std::is_same_v<T, CuspCoverInstance>) {
                return check_cusp_cover(i, eps);
            } else if constexpr (std::is_same_v<T, HullAbsorptionInstance>) {
                return check_hull_absorption(i, eps);
            } else if constexpr (std::is_same_v<T, DisjointAreasInstance>) {
                return check_disjoint_areas(i, eps);
            } else {
                return check_tangent_meet(i, eps);
            }
        },
        inst);
}

namespace {

Wedge sample_wedge(std::mt19937_64& rng) {
    Point apex{uniform(rng, 0, 1), uniform(rng, 0, 1)};
    double theta = uniform(rng, 0, two_pi);
    double opening = uniform(rng, 0.25, 2.7);
    return Wedge{apex, unit(theta), unit(theta + opening)};
}

}  // namespace

HullAbsorptionInstance sample_hull_absorption(std::mt19937_64& rng, double delta) {
    for (;;) {
        Wedge w = sample_wedge(rng);
        Circle p = inscribe_in_wedge(w, uniform(rng, 0.3, 1.5));
        Region w1 = corner_region(w.apex, p);
        // a point with clearance inside w1, then a small circle holding it
        Triangle corner{w.apex, w1.touch1, w1.touch2};
        Point witness;
        double clearance = 0.0;
        bool found = false;
        for (int attempt = 0; attempt < 400 && !found; ++attempt) {
            Point q = sample_point_in_triangle(rng, corner);
            for (double c0 : {0.05, 0.02, 0.008, 3 * delta}) {
                if (region_contains(w1, q, c0)) {
                    witness = q;
                    clearance = c0;
                    found = true;
                    break;
                }
            }
        }
        if (!found) continue;
        for (int attempt = 0; attempt < 100; ++attempt) {
            double ry = uniform(rng, std::min(0.5 * clearance, 2 * delta), 2 * clearance);
            Point c = witness + uniform(rng, 0, 0.3 * ry) * unit(uniform(rng, 0, two_pi));
            Circle y{c, ry};
            if (!w.contains_disc(y, delta)) continue;
            return HullAbsorptionInstance{w, p, y};
        }
    }
}

DisjointAreasInstance sample_disjoint_areas(std::mt19937_64& rng, double delta) {
    for (;;) {
        Triangle tri = sample_triangle(rng);
        Wedge w{tri.a, normalized(tri.b - tri.a), normalized(tri.c - tri.a)};
        Circle p = inscribe_in_wedge(w, uniform(rng, 0.1, 1.0) * dist(tri.a, tri.b));
        if (triangle_clearance(p.c, tri) < p.r + delta) continue;
        Circle y = sample_circle_in_triangle(rng, tri, delta);
        return DisjointAreasInstance{tri, p, y};
    }
}

TangentMeetInstance sample_tangent_meet(std::mt19937_64& rng, double delta) {
    const double ang_margin = 0.05;
    for (;;) {
        Wedge w = sample_wedge(rng);
        Circle s = inscribe_in_wedge(w, uniform(rng, 0.3, 1.5));
        auto [q1, q2] = wedge_touch_points(w, s);
        double phi1 = angle_of(q1 - s.c);
        double phi2 = angle_of(q2 - s.c);
        double phi_apex = angle_of(w.apex - s.c);
        double lo = phi1, hi = phi2;
        if (!ccw_between(lo, phi_apex, hi, 0.0)) std::swap(lo, hi);
        double near_span = ccw_span(lo, hi);
        double far_span = two_pi - near_span;
        if (near_span < 3 * ang_margin || far_span < 3 * ang_margin) continue;
        double near_angle = lo + uniform(rng, ang_margin, near_span - ang_margin);
        double far_angle = hi + uniform(rng, ang_margin, far_span - ang_margin);
        // keep the tangents away from parallel
        double diff = std::fmod(std::abs(near_angle - far_angle), std::numbers::pi);
        if (diff < 0.02 || diff > std::numbers::pi - 0.02) continue;
        (void)delta;
        return TangentMeetInstance{w, s, near_angle, far_angle};
    }
}

CuspCoverInstance sample_cusp_cover(std::mt19937_64& rng, double delta) {
    for (;;) {
        Triangle tri = sample_triangle(rng);
        Circle x = sample_circle_in_triangle(rng, tri, delta, 5e-3);
        if (!b_side_tangents(tri, x)) continue;
        return CuspCoverInstance{tri, x};
    }
}

EndpointConditionsInstance sample_endpoint_conditions(std::mt19937_64& rng, double delta) {
    for (;;) {
        Triangle tri = sample_triangle(rng);
        Circle x = sample_circle_in_triangle(rng, tri, delta, 5e-3);
        auto bt = b_side_tangents(tri, x);
        if (!bt) continue;
        if (!point_in_triangle(bt->n, tri, 1e-6)) continue;
        Triangle acn;
        try {
            acn = Triangle::clockwise(tri.a, tri.c, bt->n);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (std::abs(acn.signed_area()) < 0.01) continue;
        for (int attempt = 0; attempt < 50; ++attempt) {
            Circle y = sample_circle_in_triangle(rng, acn, delta);
            if (triangle_clearance(y.c, tri) < y.r + delta) continue;
            EndpointConditionsInstance inst{tri, x, y};
            auto proj = side_projections(tri, x, y, 1e-9);
            const auto& ab = proj[0];
            const auto& bc = proj[1];
            const auto& ca = proj[2];
            bool any = ca.y1 < ca.x1 - delta || ca.y2 > ca.x2 + delta ||
                       bc.y2 > bc.x2 + delta || ab.y1 < ab.x1 - delta;
            if (any) return inst;
        }
    }
}

}  // namespace carousel
