#include "carousel/sampling.hpp"

#include <cmath>
#include <numbers>

#include "carousel/rng.hpp"

namespace carousel {

Triangle sample_triangle(std::mt19937_64& rng) {
    for (;;) {
        Point a{uniform(rng, 0, 1), uniform(rng, 0, 1)};
        Point b{uniform(rng, 0, 1), uniform(rng, 0, 1)};
        Point c{uniform(rng, 0, 1), uniform(rng, 0, 1)};
        if (std::abs(0.5 * cross(b - a, c - a)) < 0.1) continue;
        return Triangle::clockwise(a, b, c);
    }
}

Point sample_point_in_triangle(std::mt19937_64& rng, const Triangle& tri) {
    double u = uniform(rng, 0, 1);
    double v = uniform(rng, 0, 1);
    if (u + v > 1) {
        u = 1 - u;
        v = 1 - v;
    }
    return tri.a + u * (tri.b - tri.a) + v * (tri.c - tri.a);
}

Circle sample_circle_in_triangle(std::mt19937_64& rng, const Triangle& tri, double delta,
                                 double min_radius) {
    for (;;) {
        Point c = sample_point_in_triangle(rng, tri);
        double slack = triangle_clearance(c, tri) - delta;
        if (slack <= min_radius) continue;
        return Circle{c, uniform(rng, min_radius, slack)};
    }
}

std::vector<Point> disc_sample_points(const Circle& c, int rings, int spokes) {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(rings * spokes + 1));
    out.push_back(c.c);
    if (c.r == 0.0) return out;
    for (int k = 1; k <= rings; ++k) {
        double r = c.r * static_cast<double>(k) / rings;
        for (int j = 0; j < spokes; ++j) {
            double theta = 2.0 * std::numbers::pi * j / spokes;
            out.push_back(c.c + r * unit(theta));
        }
    }
    return out;
}

}  // namespace carousel
