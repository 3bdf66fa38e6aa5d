#include "carousel/triangle_config.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "carousel/rng.hpp"
#include "carousel/sampling.hpp"

namespace carousel {

namespace {

struct SideRef {
    Point from, to;  // clockwise walk
    Point opposite;
};

SideRef side_ref(const Triangle& tri, Side s) {
    switch (s) {
        case Side::AB: return {tri.a, tri.b, tri.c};
        case Side::BC: return {tri.b, tri.c, tri.a};
        case Side::CA: return {tri.c, tri.a, tri.b};
    }
    throw std::logic_error("unreachable");
}

// Parameter on segment (from, to) where the line from v through t crosses it.
double cut_parameter(const SideRef& side, Point v, Point t) {
    Point dir = t - v;
    double den = cross(side.to - side.from, dir);
    if (den == 0.0) throw std::invalid_argument("tangent parallel to the opposite side");
    return cross(v - side.from, dir) / den;
}

}  // namespace

std::array<SideSpan, 3> project(const Triangle& tri, const Circle& c, double eps) {
    for (Side s : {Side::AB, Side::BC, Side::CA}) {
        SideRef ref = side_ref(tri, s);
        double d = std::abs(cross(ref.to - ref.from, c.c - ref.from)) / dist(ref.from, ref.to);
        if (d <= c.r + eps) throw std::invalid_argument("circle not strictly inside the triangle");
    }
    std::array<SideSpan, 3> out;
    for (Side s : {Side::AB, Side::BC, Side::CA}) {
        SideRef ref = side_ref(tri, s);
        auto [t1, t2] = tangent_points(ref.opposite, c, eps);
        double p1 = cut_parameter(ref, ref.opposite, t1);
        double p2 = cut_parameter(ref, ref.opposite, t2);
        if (p1 > p2) std::swap(p1, p2);
        out[static_cast<std::size_t>(s)] = SideSpan{p1, p2};
    }
    return out;
}

std::array<SideProjection, 3> side_projections(const Triangle& tri, const Circle& x,
                                               const Circle& y, double eps) {
    auto px = project(tri, x, eps);
    auto py = project(tri, y, eps);
    std::array<SideProjection, 3> out;
    for (int i = 0; i < 3; ++i) {
        auto s = static_cast<std::size_t>(i);
        out[s] = SideProjection{static_cast<Side>(i), px[s].lo, px[s].hi, py[s].lo, py[s].hi};
    }
    return out;
}

std::optional<SideCode> side_code(const SideProjection& proj, double eps) {
    const double vals[4] = {proj.x1, proj.x2, proj.y1, proj.y2};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (std::abs(vals[i] - vals[j]) <= eps) return std::nullopt;
        }
    }
    if (proj.y2 < proj.x1) return 1;
    if (proj.x2 < proj.y1) return 2;
    if (proj.x1 < proj.y1 && proj.y2 < proj.x2) return 3;
    if (proj.y1 < proj.x1 && proj.x2 < proj.y2) return 4;
    if (proj.y1 < proj.x1 && proj.x1 < proj.y2 && proj.y2 < proj.x2) return 5;
    return 6;
}

std::optional<ConfigCode> config_code(const std::array<SideProjection, 3>& projections,
                                      double eps) {
    auto j = side_code(projections[0], eps);
    auto k = side_code(projections[1], eps);
    auto l = side_code(projections[2], eps);
    if (!j || !k || !l) return std::nullopt;
    return ConfigCode{*j, *k, *l};
}

std::optional<ConfigCode> config_code(const Triangle& tri, const Circle& x, const Circle& y,
                                      double eps) {
    return config_code(side_projections(tri, x, y, eps), eps);
}

ConfigCode rotate_code(const ConfigCode& c) { return {c.k, c.l, c.j}; }

ConfigCode swap_code(const ConfigCode& c) {
    auto sw = [](int v) {
        switch (v) {
            case 1: return 2;
            case 2: return 1;
            case 3: return 4;
            case 4: return 3;
            case 5: return 6;
            case 6: return 5;
        }
        throw std::invalid_argument("side code out of range");
    };
    return {sw(c.j), sw(c.k), sw(c.l)};
}

namespace {

// The 38 classes, transcribed member lists.
const std::vector<std::vector<int>> class_fixture = {
    {121, 122, 112, 221, 211, 212},  // S1
    {111, 222},                      // S2
    {123, 142, 214, 231, 312, 421},  // S3
    {124, 132, 213, 241, 321, 412},  // S4
    {113, 131, 224, 242, 311, 422},  // S5
    {114, 141, 223, 232, 322, 411},  // S6
    {125, 162, 216, 251, 512, 621},  // S7
    {126, 152, 215, 261, 521, 612},  // S8
    {115, 151, 226, 262, 511, 622},  // S9
    {116, 161, 225, 252, 522, 611},  // S10
    {133, 244, 313, 331, 424, 442},  // S11
    {134, 243, 324, 341, 413, 432},  // S12
    {143, 234, 314, 342, 423, 431},  // S13
    {144, 233, 323, 332, 414, 441},  // S14
    {135, 246, 351, 462, 513, 624},  // S15
    {136, 245, 361, 452, 524, 613},  // S16
    {145, 236, 362, 451, 514, 623},  // S17
    {146, 235, 352, 461, 523, 614},  // S18
    {163, 254, 316, 425, 542, 631},  // S19
    {164, 253, 325, 416, 532, 641},  // S20
    {153, 264, 315, 426, 531, 642},  // S21
    {154, 263, 326, 415, 541, 632},  // S22
    {165, 256, 516, 562, 625, 651},  // S23
    {166, 255, 525, 552, 616, 661},  // S24
    {155, 266, 551, 515, 626, 662},  // S25
    {156, 265, 526, 561, 615, 652},  // S26
    {333, 444},                      // S27
    {334, 343, 344, 433, 434, 443},  // S28
    {335, 353, 446, 464, 533, 644},  // S29
    {336, 363, 445, 454, 544, 633},  // S30
    {345, 364, 436, 453, 534, 643},  // S31
    {346, 354, 435, 463, 543, 634},  // S32
    {365, 456, 536, 564, 645, 653},  // S33
    {366, 455, 545, 554, 663, 636},  // S34
    {355, 466, 535, 553, 646, 664},  // S35
    {356, 465, 546, 563, 635, 654},  // S36
    {565, 556, 566, 655, 656, 665},  // S37
    {555, 666},                      // S38
};

// Realizable classes; the rest are dismissed by the four impossibility
// arguments.
const std::set<int> realizable_ids = {1, 3, 4, 7, 8, 11, 14, 16, 18, 19,
                                      20, 23, 24, 26, 27, 29, 30, 33, 36, 37};

std::set<int> orbit_of(int code) {
    std::set<int> orbit;
    std::vector<ConfigCode> stack{ConfigCode::from_int(code)};
    while (!stack.empty()) {
        ConfigCode c = stack.back();
        stack.pop_back();
        if (!orbit.insert(c.as_int()).second) continue;
        stack.push_back(rotate_code(c));
        stack.push_back(swap_code(c));
    }
    return orbit;
}

}  // namespace

ClassTable::ClassTable() {
    // Orbits of the rotation/swap group over all 216 codes.
    std::map<int, std::set<int>> orbits;  // min member -> orbit
    for (int j = 1; j <= 6; ++j) {
        for (int k = 1; k <= 6; ++k) {
            for (int l = 1; l <= 6; ++l) {
                std::set<int> orb = orbit_of(j * 100 + k * 10 + l);
                orbits[*orb.begin()] = orb;
            }
        }
    }
    if (orbits.size() != class_fixture.size()) {
        throw std::logic_error("orbit count does not match the class fixture");
    }
    class_by_code_.fill(0);
    int id = 1;
    for (const auto& members : class_fixture) {
        std::set<int> fixture_set(members.begin(), members.end());
        auto it = orbits.find(*fixture_set.begin());
        if (it == orbits.end() || it->second != fixture_set) {
            throw std::logic_error("class fixture does not match the computed orbit of S" +
                                   std::to_string(id));
        }
        ClassInfo info;
        info.id = id;
        info.members = members;
        info.realizable = realizable_ids.count(id) > 0;
        for (int code : members) class_by_code_[static_cast<std::size_t>(code)] = id;
        classes_.push_back(std::move(info));
        ++id;
    }
    int covered = 0;
    for (const auto& cls : classes_) covered += static_cast<int>(cls.members.size());
    if (covered != 216) throw std::logic_error("class fixture does not cover all 216 codes");
}

const ClassTable& ClassTable::instance() {
    static const ClassTable table;
    return table;
}

int ClassTable::class_of(const ConfigCode& code) const { return class_of(code.as_int()); }

int ClassTable::class_of(int code_as_int) const {
    if (code_as_int < 111 || code_as_int > 666) throw std::invalid_argument("bad configuration code");
    int id = class_by_code_[static_cast<std::size_t>(code_as_int)];
    if (id == 0) throw std::invalid_argument("bad configuration code");
    return id;
}

namespace {

// How close the code is to the class: the best per-side match count over the
// class members.
int class_score(const ConfigCode& code, const ClassInfo& cls) {
    int best = 0;
    for (int m : cls.members) {
        ConfigCode t = ConfigCode::from_int(m);
        int hits = (t.j == code.j) + (t.k == code.k) + (t.l == code.l);
        best = std::max(best, hits);
    }
    return best;
}

struct CandidateScene {
    Triangle tri;
    Circle x, y;
};

CandidateScene sample_candidate(std::mt19937_64& rng, double delta, int strategy) {
    Triangle tri = sample_triangle(rng);
    Circle x = sample_circle_in_triangle(rng, tri, delta);
    Circle y;
    switch (strategy) {
        case 1: {  // small circle deep inside x's corridor: nested-leaning codes
            for (;;) {
                Point c = x.c + (x.r * uniform(rng, 0.0, 0.8)) * unit(uniform(rng, 0, 6.2831853));
                double slack = std::min(triangle_clearance(c, tri) - delta, x.r - dist(c, x.c));
                if (slack <= delta) continue;
                y = Circle{c, uniform(rng, delta, slack)};
                break;
            }
            break;
        }
        case 2: {  // sibling of x: heavy-overlap codes
            for (;;) {
                Point c = x.c + (x.r * uniform(rng, 0.05, 1.2)) * unit(uniform(rng, 0, 6.2831853));
                double cl = triangle_clearance(c, tri) - delta;
                if (cl <= delta) continue;
                double r = std::min(cl, x.r * uniform(rng, 0.5, 1.4));
                if (r <= delta) continue;
                y = Circle{c, r};
                break;
            }
            break;
        }
        default:
            y = sample_circle_in_triangle(rng, tri, delta);
            break;
    }
    return {tri, x, y};
}

}  // namespace

std::optional<Realization> search_realization(int class_id, std::uint64_t budget,
                                              std::uint64_t seed, double delta) {
    const ClassInfo& cls = ClassTable::instance().class_info(class_id);
    std::optional<CandidateScene> best;
    int best_score = -1;

    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        auto rng = trial_rng(seed, trial);
        CandidateScene cand;
        // After a warm-up phase, half the trials perturb the best scene so far.
        if (best && trial > budget / 4 && trial % 2 == 0) {
            cand = *best;
            double step = 0.02 * uniform(rng, 0.1, 1.0);
            auto jitter = [&](Circle& c) {
                c.c.x += uniform(rng, -step, step);
                c.c.y += uniform(rng, -step, step);
                c.r = std::max(delta, c.r + uniform(rng, -step, step));
            };
            jitter(trial % 4 == 0 ? cand.x : cand.y);
            bool ok = true;
            for (const Circle* c : {&cand.x, &cand.y}) {
                if (triangle_clearance(c->c, cand.tri) < c->r + delta) ok = false;
            }
            if (!ok) continue;
        } else {
            cand = sample_candidate(rng, delta, static_cast<int>(trial % 3));
        }

        auto code = config_code(cand.tri, cand.x, cand.y, delta / 2);
        if (!code) continue;
        int score = class_score(*code, cls);
        if (score > best_score) {
            best_score = score;
            best = cand;
        }
        if (std::find(cls.members.begin(), cls.members.end(), code->as_int()) !=
            cls.members.end()) {
            // re-validate at the scene tolerance before accepting
            auto confirm = config_code(cand.tri, cand.x, cand.y, 1e-9);
            if (confirm && ClassTable::instance().class_of(*confirm) == class_id) {
                return Realization{cand.tri, cand.x, cand.y, *confirm};
            }
        }
    }
    return std::nullopt;
}

TriangleCarouselVerdict weak_carousel_triangle(const Circle& x, const Circle& y,
                                               const Triangle& tri, double eps) {
    const Circle vertices[3] = {{tri.a, 0.0}, {tri.b, 0.0}, {tri.c, 0.0}};
    std::vector<Circle> all(vertices, vertices + 3);
    if (!disc_in_hull(x, all, eps) || !disc_in_hull(y, all, eps)) {
        throw std::invalid_argument("weak_carousel_triangle: circle outside the triangle hull");
    }
    TriangleCarouselVerdict verdict;
    for (int u = 0; u < 3; ++u) {
        for (int v = u + 1; v < 3; ++v) {
            const std::array<Circle, 3> with_y{y, vertices[u], vertices[v]};
            if (disc_in_hull(x, with_y, eps)) {
                verdict.holds = true;
                verdict.witness = TriangleCarouselWitness{true, u, v};
                return verdict;
            }
            const std::array<Circle, 3> with_x{x, vertices[u], vertices[v]};
            if (disc_in_hull(y, with_x, eps)) {
                verdict.holds = true;
                verdict.witness = TriangleCarouselWitness{false, u, v};
                return verdict;
            }
        }
    }
    return verdict;
}

std::optional<BSideTangents> b_side_tangents(const Triangle& tri, const Circle& x, double eps) {
    auto pick_line = [&](Point v, Side cut_side, bool nearest_to_from) -> std::optional<Line> {
        SideRef ref = side_ref(tri, cut_side);
        auto [t1, t2] = tangent_points(v, x, eps);
        double p1 = cut_parameter(ref, v, t1);
        double p2 = cut_parameter(ref, v, t2);
        Point t = nearest_to_from ? (p1 < p2 ? t1 : t2) : (p1 < p2 ? t2 : t1);
        return Line{v, t - v};
    };
    // from A, cutting BC at the parameter nearest B (= the walk start of BC);
    // from C, cutting AB at the parameter nearest B (= the walk end of AB)
    auto la = pick_line(tri.a, Side::BC, true);
    auto lc = pick_line(tri.c, Side::AB, false);
    if (!la || !lc) return std::nullopt;
    auto n = intersect_lines(*la, *lc, 1e-9);
    if (!n) return std::nullopt;
    return BSideTangents{*la, *lc, *n};
}

AcnOutcome check_acn_containment(const Triangle& tri, const Circle& x, const Circle& y,
                                 double eps) {
    auto code = config_code(tri, x, y, eps);
    if (!code) return AcnOutcome::Rejected;
    const bool j_ok = code->j == 1 || code->j == 3 || code->j == 5;
    const bool k_ok = code->k == 2 || code->k == 3 || code->k == 6;
    if (!j_ok || !k_ok) return AcnOutcome::Rejected;
    auto bt = b_side_tangents(tri, x, eps);
    if (!bt) return AcnOutcome::Rejected;
    Triangle acn{tri.a, tri.c, bt->n};
    return triangle_clearance(y.c, acn) >= y.r - eps ? AcnOutcome::Pass : AcnOutcome::Fail;
}

}  // namespace carousel
