#include "carousel/scene.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace carousel {

GroundSet Scene::ground() const {
    std::vector<std::string> names;
    names.reserve(circles.size());
    for (const auto& [name, circle] : circles) names.push_back(name);
    return GroundSet(std::move(names));
}

const Circle& Scene::circle(std::string_view name) const {
    for (const auto& [n, c] : circles) {
        if (n == name) return c;
    }
    throw std::invalid_argument("unknown circle: " + std::string(name));
}

std::vector<Circle> Scene::discs_of(Mask m) const {
    std::vector<Circle> out;
    for (int i = 0; i < size(); ++i) {
        if (m & bit(i)) out.push_back(circles[static_cast<std::size_t>(i)].second);
    }
    return out;
}

void Scene::validate() const {
    if (tolerance <= 0) throw std::invalid_argument("scene tolerance must be positive");
    std::unordered_set<std::string_view> seen;
    for (const auto& [name, circle] : circles) {
        if (name.empty()) throw std::invalid_argument("empty circle name");
        if (!seen.insert(name).second) throw std::invalid_argument("duplicate circle name: " + name);
        if (!(circle.r >= 0.0)) throw std::invalid_argument("negative radius on circle " + name);
        if (!std::isfinite(circle.c.x) || !std::isfinite(circle.c.y) || !std::isfinite(circle.r)) {
            throw std::invalid_argument("non-finite circle " + name);
        }
    }
}

Mask ch_c(const Scene& scene, Mask y) {
    const int n = scene.size();
    if (y & ~((Mask{1} << n) - 1)) throw std::invalid_argument("subset references unknown circles");
    if (y == 0) return 0;
    std::vector<Circle> gen = scene.discs_of(y);
    Mask out = 0;
    for (int i = 0; i < n; ++i) {
        if (y & bit(i)) {
            out |= bit(i);
            continue;
        }
        if (disc_in_hull(scene.circles[static_cast<std::size_t>(i)].second, gen, scene.tolerance)) {
            out |= bit(i);
        }
    }
    return out;
}

std::vector<std::string> ch_c(const Scene& scene, std::span<const std::string> names) {
    GroundSet g = scene.ground();
    return g.names_of(ch_c(scene, g.mask_of(names)));
}

ClosedFamily scene_alignment(const Scene& scene) {
    const int n = scene.size();
    if (n > max_ground_size) throw std::invalid_argument("scene too large for alignment");
    scene.validate();
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> closed;
    for (Mask s = 0;; ++s) {
        if (ch_c(scene, s) == s) closed.push_back(s);
        if (s == full) break;
    }
    return ClosedFamily(scene.ground(), std::move(closed));
}

Region corner_region(Point apex, const Circle& c, RegionKind kind, double eps) {
    auto [t1, t2] = tangent_points(apex, c, eps);
    Region reg;
    reg.kind = kind;
    reg.apex = apex;
    reg.circle = c;
    reg.touch1 = t1;
    reg.touch2 = t2;
    return reg;
}

namespace {

bool w1_contains(const Region& reg, Point p, double margin) {
    if (dist(reg.apex, reg.touch1) < 1e-12 && dist(reg.apex, reg.touch2) < 1e-12) return false;
    double dr = dist(p, reg.circle.c) - reg.circle.r;
    if (dr < margin) return false;  // inside the open disc (or too close to it)
    Triangle t{reg.apex, reg.touch1, reg.touch2};
    if (reg.circle.r == 0.0) return false;  // degenerate corner, empty area
    return point_in_triangle(p, t, margin);
}

}  // namespace

bool region_contains(const Region& reg, Point p, double margin) {
    switch (reg.kind) {
        case RegionKind::W1:
        case RegionKind::WN:
            return w1_contains(reg, p, margin);
        case RegionKind::W2: {
            if (!reg.enclosing) throw std::invalid_argument("W2 region requires an enclosing triangle");
            double dr = dist(p, reg.circle.c) - reg.circle.r;
            if (dr < margin) return false;
            if (!point_in_triangle(p, *reg.enclosing, margin)) return false;
            // outside the paired corner area, with the complementary margin
            Region w1 = reg;
            w1.kind = RegionKind::W1;
            return !w1_contains(w1, p, -margin);
        }
    }
    return false;
}

bool region_margin_ambiguous(const Region& reg, Point p, double band) {
    return region_contains(reg, p, band) != region_contains(reg, p, -band);
}

namespace {

// The outer tangent of (c1, c2) that supports the hull of all three discs.
std::optional<TangentLine> supporting_tangent(const Circle& c1, const Circle& c2,
                                              const Circle& other, double eps) {
    std::array<TangentLine, 2> cands = external_tangents(c1, c2, eps);
    std::optional<TangentLine> best;
    double best_slack = 0.0;
    for (const TangentLine& t : cands) {
        // outward normal: from touch point away from the circle centers
        Point n = normalized(t.touch1 - c1.c);
        if (c1.r == 0.0 && c2.r == 0.0) {
            // point-circles: the two candidate lines coincide; orient both ways
            for (double sgn : {1.0, -1.0}) {
                Point nn = sgn * normalized(perp(t.line.dir));
                double h12 = dot(nn, c1.c) + c1.r;
                double slack = h12 - (dot(nn, other.c) + other.r);
                if (!best || slack > best_slack) {
                    best = t;
                    best_slack = slack;
                }
            }
            continue;
        }
        if (c1.r == 0.0) n = normalized(t.touch2 - c2.c);
        double h12 = dot(n, c1.c) + c1.r;
        double slack = h12 - (dot(n, other.c) + other.r);
        if (!best || slack > best_slack) {
            best = t;
            best_slack = slack;
        }
    }
    if (best_slack < -eps) return std::nullopt;  // third disc pokes past both tangents
    return best;
}

}  // namespace

std::optional<TangentTriangleResult> tangent_triangle(const Circle& a, const Circle& b,
                                                      const Circle& c, double eps) {
    const Circle circles[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        std::vector<Circle> others;
        for (int j = 0; j < 3; ++j) {
            if (j != i) others.push_back(circles[j]);
        }
        if (disc_in_hull(circles[i], others, eps)) return std::nullopt;
    }

    std::optional<TangentLine> t_ab, t_bc, t_ca;
    try {
        t_ab = supporting_tangent(a, b, c, eps);
        t_bc = supporting_tangent(b, c, a, eps);
        t_ca = supporting_tangent(c, a, b, eps);
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // nested pair
    }
    if (!t_ab || !t_bc || !t_ca) return std::nullopt;

    // vertex A joins the tangents touching circle a, and so on
    auto va = intersect_lines(t_ca->line, t_ab->line, 1e-9);
    auto vb = intersect_lines(t_ab->line, t_bc->line, 1e-9);
    auto vc = intersect_lines(t_bc->line, t_ca->line, 1e-9);
    if (!va || !vb || !vc) return std::nullopt;

    TangentTriangleResult out;
    out.tri = Triangle{*va, *vb, *vc};
    if (std::abs(out.tri.signed_area()) < 1e-12) return std::nullopt;
    out.tangents = {*t_ab, *t_bc, *t_ca};
    try {
        out.corners = {corner_region(*va, a, RegionKind::W1, eps),
                       corner_region(*vb, b, RegionKind::W1, eps),
                       corner_region(*vc, c, RegionKind::W1, eps)};
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // a vertex landed on its circle
    }
    return out;
}

}  // namespace carousel
