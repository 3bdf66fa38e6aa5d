#pragma once

// Planar primitives: points, circles, lines, triangles, tangent constructions.

#include <array>
#include <cmath>
#include <optional>
#include <utility>

namespace carousel {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point&) const = default;
};

inline Point operator*(double s, Point p) { return p * s; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point normalized(Point a) {
    double n = norm(a);
    return {a.x / n, a.y / n};
}
inline Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point rotate(Point p, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {p.x * c - p.y * s, p.x * s + p.y * c};
}

struct Circle {
    Point c;
    double r = 0.0;  // r == 0 denotes a point-circle
};

// Support value of a disc in direction angle theta.
inline double support(const Circle& circle, double theta) {
    return dot(circle.c, unit(theta)) + circle.r;
}
inline double support(const Circle& circle, Point direction) {
    return dot(circle.c, direction) + circle.r * norm(direction);
}

struct Line {
    Point p;
    Point dir;  // not necessarily unit length
};

// Intersection of two lines; nullopt when parallel within eps (relative to
// the direction magnitudes).
std::optional<Point> intersect_lines(const Line& a, const Line& b, double eps = 1e-12);

// Signed distance of point q from the line, positive on the side of perp(dir).
inline double line_side(const Line& l, Point q) {
    return cross(l.dir, q - l.p) / norm(l.dir);
}

struct Triangle {
    Point a, b, c;

    double signed_area() const { return 0.5 * cross(b - a, c - a); }
    // Reorders to a clockwise vertex walk (negative signed area); never
    // reflects. Throws on a degenerate triangle.
    static Triangle clockwise(Point a, Point b, Point c, double eps = 1e-12);
};

// Closed-triangle membership; margin > 0 demands clearance from every edge,
// margin < 0 inflates the triangle. Degenerate triangles contain nothing.
bool point_in_triangle(Point p, const Triangle& t, double margin = 0.0);

// Distance from p to the triangle's boundary, negative outside.
double triangle_clearance(Point p, const Triangle& t);

// The two tangent touch points on c as seen from an exterior point p,
// ordered so that (first, second) runs counterclockwise around the circle.
// Throws when p is inside or on the circle (within eps).
std::pair<Point, Point> tangent_points(Point p, const Circle& c, double eps = 1e-9);

struct TangentLine {
    Line line;
    Point touch1;  // on the first circle
    Point touch2;  // on the second circle
};

// Outer common tangents of two circles; throws when one disc contains the
// other (within eps). Equal radii yield parallel outer tangents.
std::array<TangentLine, 2> external_tangents(const Circle& c1, const Circle& c2,
                                             double eps = 1e-9);

}  // namespace carousel
