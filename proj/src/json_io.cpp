#include "carousel/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "carousel/triangle_config.hpp"

namespace carousel {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument(std::string(what) + " must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

ClosedFamily geometry_from_json(const Json& j) {
    if (!j.contains("elements")) throw std::invalid_argument("geometry file: missing \"elements\"");
    GroundSet ground(string_list(j.at("elements"), "elements"));
    const bool has_sets = j.contains("closed_sets");
    const bool has_imps = j.contains("implications");
    if (has_sets == has_imps) {
        throw std::invalid_argument(
            "geometry file: exactly one of \"closed_sets\"/\"implications\" must be present");
    }
    if (has_sets) {
        std::vector<Mask> sets;
        for (const auto& entry : j.at("closed_sets")) {
            auto names = string_list(entry, "closed_sets entry");
            sets.push_back(ground.mask_of(names));
        }
        return ClosedFamily(ground, std::move(sets));
    }
    std::vector<Implication> imps;
    for (const auto& entry : j.at("implications")) {
        auto lhs = string_list(entry.at("lhs"), "implication lhs");
        auto rhs = string_list(entry.at("rhs"), "implication rhs");
        imps.push_back({ground.mask_of(lhs), ground.mask_of(rhs)});
    }
    return closure_from_implications(ground, imps).family();
}

Json geometry_to_json(const ClosedFamily& family) {
    Json j;
    j["elements"] = family.ground().names();
    Json sets = Json::array();
    for (Mask m : family.sets()) sets.push_back(family.ground().names_of(m));
    j["closed_sets"] = std::move(sets);
    return j;
}

Scene scene_from_json(const Json& j) {
    Scene scene;
    if (j.contains("tolerance")) scene.tolerance = j.at("tolerance").get<double>();
    if (!j.contains("circles")) throw std::invalid_argument("scene file: missing \"circles\"");
    for (const auto& entry : j.at("circles")) {
        std::string name = entry.at("name").get<std::string>();
        const auto& c = entry.at("c");
        Circle circle{{c.at(0).get<double>(), c.at(1).get<double>()}, entry.at("r").get<double>()};
        scene.circles.emplace_back(std::move(name), circle);
    }
    if (j.contains("triangle")) {
        const auto& t = j.at("triangle");
        if (!t.is_array() || t.size() != 3) {
            throw std::invalid_argument("scene file: \"triangle\" must list three vertices");
        }
        auto pt = [&](int i) {
            return Point{t.at(i).at(0).get<double>(), t.at(i).at(1).get<double>()};
        };
        scene.triangle = Triangle{pt(0), pt(1), pt(2)};
    }
    scene.validate();
    return scene;
}

Json scene_to_json(const Scene& scene) {
    Json j;
    j["tolerance"] = scene.tolerance;
    Json circles = Json::array();
    for (const auto& [name, c] : scene.circles) {
        circles.push_back({{"name", name}, {"c", {c.c.x, c.c.y}}, {"r", c.r}});
    }
    j["circles"] = std::move(circles);
    if (scene.triangle) {
        const Triangle& t = *scene.triangle;
        j["triangle"] = {{t.a.x, t.a.y}, {t.b.x, t.b.y}, {t.c.x, t.c.y}};
    }
    return j;
}

Json fuzz_report_to_json(const FuzzReport& report) {
    Json j;
    j["params"] = {{"trials", report.params.trials},
                   {"seed", report.params.seed},
                   {"margin", report.params.margin},
                   {"tolerance", report.params.tolerance}};
    j["counts"] = {{"trials_run", report.trials_run},
                   {"accepted", report.accepted},
                   {"rejected_degenerate", report.rejected_degenerate},
                   {"violations", report.violations.size()}};
    Json violations = Json::array();
    for (const Scene& s : report.violations) violations.push_back(scene_to_json(s));
    j["violations"] = std::move(violations);
    Json histogram = Json::object();
    for (const auto& [cls, count] : report.class_histogram) {
        histogram["S" + std::to_string(cls)] = count;
    }
    j["histogram"] = std::move(histogram);
    return j;
}

Json class_table_to_json() {
    const ClassTable& table = ClassTable::instance();
    Json classes = Json::array();
    for (const ClassInfo& cls : table.classes()) {
        Json members = Json::array();
        for (int code : cls.members) members.push_back("C" + std::to_string(code));
        classes.push_back({{"class", "S" + std::to_string(cls.id)},
                           {"members", std::move(members)},
                           {"realizable", cls.realizable}});
    }
    return Json{{"classes", std::move(classes)}};
}

Json cdim_result_to_json(const ConvexDimensionResult& result, const GroundSet& ground) {
    Json j;
    j["k"] = result.k;
    j["exhaustive_below"] = result.exhaustive_below;
    j["refuted_below"] = result.refuted_below;
    j["budget_exhausted"] = result.budget_exhausted;
    Json chains = Json::array();
    for (const Order& o : result.chains) {
        Json chain = Json::array();
        for (int i : o) chain.push_back(ground.name(i));
        chains.push_back(std::move(chain));
    }
    j["chains"] = std::move(chains);
    return j;
}

Json carousel_verdict_to_json(const CarouselVerdict& verdict, const GroundSet& ground) {
    Json j;
    j["holds"] = verdict.holds;
    if (verdict.witness) {
        j["witness"] = {{"x", ground.name(verdict.witness->x)},
                        {"y", ground.name(verdict.witness->y)},
                        {"S", ground.names_of(verdict.witness->s)},
                        {"tuple", ground.names_of(verdict.witness->tuple)},
                        {"side", verdict.witness->x_side ? "x" : "y"}};
    }
    if (verdict.counterexample) {
        Json cand = Json::array();
        for (const auto& [base, cl] : verdict.counterexample->candidate_closures) {
            cand.push_back({{"set", ground.names_of(base)}, {"closure", ground.names_of(cl)}});
        }
        j["counterexample"] = {{"x", ground.name(verdict.counterexample->x)},
                               {"y", ground.name(verdict.counterexample->y)},
                               {"S", ground.names_of(verdict.counterexample->s)},
                               {"candidate_closures", std::move(cand)}};
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

ClosedFamily load_geometry(const std::string& path) { return geometry_from_json(load_json_file(path)); }

Scene load_scene(const std::string& path) { return scene_from_json(load_json_file(path)); }

}  // namespace carousel
