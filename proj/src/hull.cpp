#include "carousel/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace carousel {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

bool disc_in_hull(const Circle& z, std::span<const Circle> s, double eps) {
    if (s.empty()) throw std::invalid_argument("disc_in_hull: empty hull generator set");

    // Direction theta separates z from disc i iff
    //   (z.c - c_i) . u(theta) > (r_i - z.r) + eps,
    // an open arc of half-width acos(b/|a|) centered on the direction of a.
    struct Arc {
        double lo, hi;
    };
    std::vector<Arc> arcs;
    arcs.reserve(s.size());
    for (const Circle& ci : s) {
        Point a = z.c - ci.c;
        double b = (ci.r - z.r) + eps;
        double la = norm(a);
        if (la <= 1e-300) {
            if (b < 0) continue;  // separated in every direction from this disc
            return true;          // no direction separates from this disc
        }
        double c0 = b / la;
        if (c0 >= 1.0) return true;  // constraint unsatisfiable
        if (c0 < -1.0) continue;     // constraint holds everywhere
        double w = std::acos(std::clamp(c0, -1.0, 1.0));
        double alpha = std::atan2(a.y, a.x);
        arcs.push_back({alpha - w, alpha + w});
    }
    if (arcs.empty()) return false;  // every direction separates z from all discs

    // Sweep for a point covered by all arcs. Ends sort before starts at equal
    // angles so that open arcs touching in a single point do not count.
    std::vector<std::pair<double, int>> events;
    events.reserve(arcs.size() * 2 + 2);
    int baseline = 0;
    for (const Arc& arc : arcs) {
        double lo = std::fmod(arc.lo, two_pi);
        if (lo < 0) lo += two_pi;
        double hi = std::fmod(arc.hi, two_pi);
        if (hi < 0) hi += two_pi;
        if (lo < hi) {
            events.emplace_back(lo, +1);
            events.emplace_back(hi, -1);
        } else {
            // wraps through zero
            baseline += 1;
            events.emplace_back(hi, -1);
            events.emplace_back(lo, +1);
        }
    }
    std::sort(events.begin(), events.end());
    const int needed = static_cast<int>(arcs.size());
    int cover = baseline;
    double prev = 0.0;
    for (const auto& [angle, delta] : events) {
        if (cover == needed && angle > prev) return false;
        cover += delta;
        prev = angle;
    }
    if (cover == needed && two_pi > prev) return false;
    return true;
}

bool hull_margin_ambiguous(const Circle& z, std::span<const Circle> s, double band) {
    return disc_in_hull(z, s, band) != disc_in_hull(z, s, -band);
}

}  // namespace carousel
