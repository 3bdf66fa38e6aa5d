#pragma once

// Seeded geometric samplers shared by the fuzz campaigns and lemma suites.

#include <random>
#include <vector>

#include "carousel/geometry.hpp"

namespace carousel {

// Random triangle with vertices in the unit box and |area| >= 0.1, clockwise.
Triangle sample_triangle(std::mt19937_64& rng);

// Uniform point inside the triangle.
Point sample_point_in_triangle(std::mt19937_64& rng, const Triangle& tri);

// Circle strictly inside the triangle with clearance delta from every side.
Circle sample_circle_in_triangle(std::mt19937_64& rng, const Triangle& tri, double delta,
                                 double min_radius = 1e-3);

// Deterministic interior samples of a disc: center plus rings x spokes.
std::vector<Point> disc_sample_points(const Circle& c, int rings = 12, int spokes = 48);

}  // namespace carousel
