#include "carousel/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace carousel {

namespace {

constexpr double view = 800.0;

double sx(double x) { return x * view; }
double sy(double y) { return view - y * view; }

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void line_elem(std::ostringstream& out, Point a, Point b, const char* style) {
    out << "  <line x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y)) << "\" x2=\""
        << num(sx(b.x)) << "\" y2=\"" << num(sy(b.y)) << "\" " << style << "/>\n";
}

// apex-corner area: two tangent segments joined by the near arc
void region_path(std::ostringstream& out, const Region& reg) {
    if (reg.circle.r <= 0.0) return;
    Point t1 = reg.touch1, t2 = reg.touch2;
    out << "  <path d=\"M " << num(sx(reg.apex.x)) << " " << num(sy(reg.apex.y)) << " L "
        << num(sx(t1.x)) << " " << num(sy(t1.y));
    // arc from t1 to t2 along the circle; pick the arc that stays near the apex
    double r = reg.circle.r * view;
    double c = cross(t1 - reg.circle.c, t2 - reg.circle.c);
    int sweep = c > 0 ? 0 : 1;  // y-flip inverts orientation
    out << " A " << num(r) << " " << num(r) << " 0 0 " << sweep << " " << num(sx(t2.x)) << " "
        << num(sy(t2.y));
    out << " Z\" fill=\"#d6604d\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
}

}  // namespace

std::string render_scene_svg(const Scene& scene, const RenderOptions& options) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    std::optional<TangentTriangleResult> tt;
    if (scene.size() == 3) {
        tt = tangent_triangle(scene.circles[0].second, scene.circles[1].second,
                              scene.circles[2].second, scene.tolerance);
    }

    if (scene.triangle) {
        const Triangle& t = *scene.triangle;
        const char* style = "stroke=\"#444444\" stroke-width=\"1.5\" fill=\"none\"";
        line_elem(out, t.a, t.b, style);
        line_elem(out, t.b, t.c, style);
        line_elem(out, t.c, t.a, style);
    }

    if (tt) {
        const char* style = "stroke=\"#888888\" stroke-width=\"1\" fill=\"none\"";
        line_elem(out, tt->tri.a, tt->tri.b, style);
        line_elem(out, tt->tri.b, tt->tri.c, style);
        line_elem(out, tt->tri.c, tt->tri.a, style);
        if (options.regions) {
            for (const Region& reg : tt->corners) region_path(out, reg);
        }
    }

    for (const auto& [name, c] : scene.circles) {
        double radius = c.r > 0 ? c.r * view : 2.0;
        const char* fill = c.r > 0 ? "none" : "black";
        out << "  <circle cx=\"" << num(sx(c.c.x)) << "\" cy=\"" << num(sy(c.c.y)) << "\" r=\""
            << num(radius) << "\" stroke=\"black\" stroke-width=\"1.5\" fill=\"" << fill
            << "\"/>\n";
        out << "  <text x=\"" << num(sx(c.c.x)) << "\" y=\"" << num(sy(c.c.y))
            << "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">" << name
            << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace carousel
