#pragma once

// Containment of a disc in the convex hull of a union of discs, decided by
// exact intersection of separating-direction arcs on the unit circle.

#include <span>

#include "carousel/geometry.hpp"

namespace carousel {

// True iff disc z lies in the convex hull of the union of the discs in s,
// tolerating boundary violations up to eps: z is reported inside unless some
// direction separates it from every disc by more than eps. Monotone in eps;
// a negative eps demands strict containment with clearance |eps|.
// Throws when s is empty.
bool disc_in_hull(const Circle& z, std::span<const Circle> s, double eps = 1e-9);

// True when the verdict flips between eps = +band and eps = -band, i.e. the
// instance sits inside the numeric ambiguity band.
bool hull_margin_ambiguous(const Circle& z, std::span<const Circle> s, double band);

}  // namespace carousel
