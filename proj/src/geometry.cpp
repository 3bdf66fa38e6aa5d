#include "carousel/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace carousel {

std::optional<Point> intersect_lines(const Line& a, const Line& b, double eps) {
    double den = cross(a.dir, b.dir);
    double scale = norm(a.dir) * norm(b.dir);
    if (std::abs(den) <= eps * scale) return std::nullopt;
    double t = cross(b.p - a.p, b.dir) / den;
    return a.p + t * a.dir;
}

Triangle Triangle::clockwise(Point a, Point b, Point c, double eps) {
    double area2 = cross(b - a, c - a);
    double scale = std::max({dist(a, b), dist(b, c), dist(c, a)});
    if (std::abs(area2) <= eps * scale * scale) {
        throw std::invalid_argument("degenerate triangle");
    }
    if (area2 > 0) std::swap(b, c);
    return Triangle{a, b, c};
}

bool point_in_triangle(Point p, const Triangle& t, double margin) {
    double area2 = cross(t.b - t.a, t.c - t.a);
    if (area2 == 0.0) return false;
    double s = area2 > 0 ? 1.0 : -1.0;
    auto edge_ok = [&](Point u, Point v) {
        double d = s * cross(v - u, p - u) / dist(u, v);
        return d >= margin;
    };
    return edge_ok(t.a, t.b) && edge_ok(t.b, t.c) && edge_ok(t.c, t.a);
}

double triangle_clearance(Point p, const Triangle& t) {
    double area2 = cross(t.b - t.a, t.c - t.a);
    if (area2 == 0.0) return -dist(p, t.a);
    double s = area2 > 0 ? 1.0 : -1.0;
    auto edge_dist = [&](Point u, Point v) { return s * cross(v - u, p - u) / dist(u, v); };
    return std::min({edge_dist(t.a, t.b), edge_dist(t.b, t.c), edge_dist(t.c, t.a)});
}

std::pair<Point, Point> tangent_points(Point p, const Circle& c, double eps) {
    double l = dist(p, c.c);
    if (l <= c.r + eps) throw std::invalid_argument("tangent_points: point inside or on the circle");
    if (c.r == 0.0) return {c.c, c.c};
    Point d = (p - c.c) * (1.0 / l);
    double beta = std::acos(std::clamp(c.r / l, -1.0, 1.0));
    return {c.c + c.r * rotate(d, -beta), c.c + c.r * rotate(d, beta)};
}

std::array<TangentLine, 2> external_tangents(const Circle& c1, const Circle& c2, double eps) {
    Point d = c2.c - c1.c;
    double l = norm(d);
    if (l <= std::abs(c1.r - c2.r) + eps) {
        throw std::invalid_argument("external_tangents: one disc contains the other");
    }
    Point dh = d * (1.0 / l);
    double m = (c1.r - c2.r) / l;  // unit normal n satisfies dot(n, d) = r1 - r2
    double s = std::sqrt(std::max(0.0, 1.0 - m * m));
    std::array<TangentLine, 2> out;
    for (int i = 0; i < 2; ++i) {
        double sign = i == 0 ? 1.0 : -1.0;
        Point n = m * dh + sign * s * perp(dh);
        Point t1 = c1.c + c1.r * n;
        Point t2 = c2.c + c2.r * n;
        out[static_cast<std::size_t>(i)] = TangentLine{Line{t1, perp(n)}, t1, t2};
    }
    return out;
}

}  // namespace carousel
