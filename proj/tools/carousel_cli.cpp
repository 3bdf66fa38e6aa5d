// Command-line front end: geometry/scene file checks, fuzz campaign drivers,
// taxonomy export, and SVG figure emission.
//
// Exit codes: 0 all checks pass, 1 a violation or counterexample was found,
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "carousel/harness.hpp"
#include "carousel/json_io.hpp"
#include "carousel/svg.hpp"

using namespace carousel;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

std::uint64_t resolve_seed(bool ci, std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    if (ci) throw CLI::ValidationError("--seed is required with --ci");
    std::uint64_t drawn = std::random_device{}();
    std::cerr << "seed: " << drawn << "\n";
    return drawn;
}

int run_verify(const std::string& path) {
    ClosedFamily family = load_geometry(path);
    Json out;
    bool all_pass = true;
    const std::pair<const char*, AxiomMode> modes[] = {
        {"closure_operator", AxiomMode::ClosureOperator},
        {"alignment", AxiomMode::Alignment},
        {"convex_geometry", AxiomMode::ConvexGeometry},
        {"anti_exchange", AxiomMode::AntiExchange},
    };
    for (const auto& [name, mode] : modes) {
        AxiomReport report = verify_axioms(family, mode);
        out[name] = {{"pass", report.pass}};
        if (!report.pass) {
            out[name]["violation"] = report.violation;
            all_pass = false;
        }
    }
    out["sets"] = family.size();
    std::cout << out.dump(2) << "\n";
    return all_pass ? exit_ok : exit_violation;
}

int run_cdim(const std::string& path, int max_k, double budget_seconds) {
    ClosedFamily family = load_geometry(path);
    auto result = convex_dimension(
        family, max_k,
        std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000)));
    std::cout << cdim_result_to_json(result, family.ground()).dump(2) << "\n";
    return result.k > 0 ? exit_ok : exit_violation;
}

int run_carousel(const std::string& path, const std::string& rule, int n) {
    ClosedFamily family = load_geometry(path);
    CarouselVerdict verdict;
    if (rule == "n") {
        verdict = carousel_check(family, CarouselRule::Carousel, n);
    } else if (rule == "weak-n") {
        verdict = carousel_check(family, CarouselRule::WeakCarousel, n);
    } else if (rule == "weak-2x3") {
        verdict = carousel_check(family, CarouselRule::Weak2x3);
    } else {
        throw CLI::ValidationError("unknown rule: " + rule);
    }
    std::cout << carousel_verdict_to_json(verdict, family.ground()).dump(2) << "\n";
    return verdict.holds ? exit_ok : exit_violation;
}

int run_classify(const std::string& path) {
    Scene scene = load_scene(path);
    if (!scene.triangle) throw std::invalid_argument("classify requires a \"triangle\" entry");
    if (scene.size() != 2) throw std::invalid_argument("classify requires exactly two circles");
    Triangle tri = Triangle::clockwise(scene.triangle->a, scene.triangle->b, scene.triangle->c);
    auto code = config_code(tri, scene.circles[0].second, scene.circles[1].second,
                            scene.tolerance);
    if (!code) {
        std::cout << Json{{"degenerate", true}}.dump(2) << "\n";
        return exit_violation;
    }
    int cls = ClassTable::instance().class_of(*code);
    Json out{{"code", "C" + std::to_string(code->as_int())},
             {"class", "S" + std::to_string(cls)},
             {"realizable", ClassTable::instance().class_info(cls).realizable}};
    std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int run_realize(int class_id, std::uint64_t budget, std::uint64_t seed,
                const std::string& out_path) {
    auto real = search_realization(class_id, budget, seed);
    if (!real) {
        std::cout << Json{{"class", "S" + std::to_string(class_id)}, {"found", false}}.dump(2)
                  << "\n";
        return exit_violation;
    }
    Scene scene;
    scene.triangle = real->tri;
    scene.circles = {{"x", real->x}, {"y", real->y}};
    Json out{{"class", "S" + std::to_string(class_id)},
             {"found", true},
             {"code", "C" + std::to_string(real->code.as_int())},
             {"scene", scene_to_json(scene)}};
    if (!out_path.empty()) save_json_file(out_path, scene_to_json(scene));
    std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int run_fuzz(bool theorem2, std::uint64_t trials, std::uint64_t seed, double margin) {
    FuzzParams params{trials, seed, margin, 1e-9};
    FuzzReport report = theorem2 ? fuzz_theorem2(params) : fuzz_theorem1(params);
    std::cout << fuzz_report_to_json(report).dump(2) << "\n";
    return report.violations.empty() ? exit_ok : exit_violation;
}

int run_counterexample() {
    auto report = counterexample_suite();
    Json out{{"pass", report.pass},
             {"g_is_convex_geometry", report.g_is_convex_geometry},
             {"g_weak2x3_fails_with_expected_witness",
              report.g_weak2x3_fails_with_expected_witness},
             {"g_2carousel_fails", report.g_2carousel_fails},
             {"gprime_weak2x3_holds", report.gprime_weak2x3_holds},
             {"gprime_2carousel_holds", report.gprime_2carousel_holds},
             {"g_matches_single_implication", report.g_matches_single_implication},
             {"cdim", cdim_result_to_json(report.cdim,
                                          counterexample_geometries().second.ground())}};
    std::cout << out.dump(2) << "\n";
    return report.pass ? exit_ok : exit_violation;
}

int run_sweep(int n) {
    SweepReport report = small_geometry_sweep(n);
    Json out{{"n", report.n},
             {"geometries", report.geometries},
             {"failures", report.failures}};
    if (!report.first_failure.empty()) out["first_failure"] = report.first_failure;
    std::cout << out.dump(2) << "\n";
    return report.failures == 0 ? exit_ok : exit_violation;
}

int run_render(const std::string& path, const std::string& out_path, bool regions) {
    Scene scene = load_scene(path);
    std::string svg = render_scene_svg(scene, {regions});
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << svg;
    std::cout << Json{{"out", out_path}, {"bytes", svg.size()}}.dump(2) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex geometries of circles on a plane: checks and campaigns"};
    app.require_subcommand(1);
    bool ci = false;
    app.add_flag("--ci", ci, "require --seed on randomized verbs");

    std::string geometry_path, scene_path, out_path, rule = "weak-2x3";
    int max_k = 7, n_param = 2, sweep_n = 4, class_id = 1;
    double budget_seconds = 1800.0, margin = 1e-3;
    std::uint64_t trials = 10000, budget = 100000;
    std::optional<std::uint64_t> seed;
    bool regions = false;

    auto* verify = app.add_subcommand("verify", "axiom report for a geometry file");
    verify->add_option("geometry", geometry_path)->required();

    auto* cdim = app.add_subcommand("cdim", "convex dimension search");
    cdim->add_option("geometry", geometry_path)->required();
    cdim->add_option("--max-k", max_k);
    cdim->add_option("--budget", budget_seconds, "seconds");

    auto* carousel_cmd = app.add_subcommand("carousel", "carousel rule check");
    carousel_cmd->add_option("geometry", geometry_path)->required();
    carousel_cmd->add_option("--rule", rule, "n | weak-n | weak-2x3");
    carousel_cmd->add_option("--n", n_param);

    auto* classify = app.add_subcommand("classify", "configuration code of a scene");
    classify->add_option("scene", scene_path)->required();

    auto* realize = app.add_subcommand("realize", "search a class realization");
    std::string class_name;
    realize->add_option("--class", class_name, "S1..S38")->required();
    realize->add_option("--budget", budget, "trials");
    realize->add_option("--seed", seed);
    realize->add_option("--out", out_path, "write the found scene here");

    auto* thm1 = app.add_subcommand("fuzz-thm1", "weak carousel property campaign");
    thm1->add_option("--trials", trials);
    thm1->add_option("--seed", seed);
    thm1->add_option("--margin", margin);

    auto* thm2 = app.add_subcommand("fuzz-thm2", "weak 2x3 rule campaign");
    thm2->add_option("--trials", trials, "accepted scenes to accumulate");
    thm2->add_option("--seed", seed);
    thm2->add_option("--margin", margin);

    app.add_subcommand("counterexample", "five-element counterexample suite");

    auto* sweep = app.add_subcommand("sweep", "exhaustive small-geometry sweep");
    sweep->add_option("--n", sweep_n)->required();

    auto* render = app.add_subcommand("render", "emit an SVG figure");
    render->add_option("scene", scene_path)->required();
    render->add_option("--out", out_path)->required();
    render->add_flag("--regions", regions);

    app.add_subcommand("class-table", "export the 38-class fixture")
        ->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(geometry_path);
        if (cdim->parsed()) return run_cdim(geometry_path, max_k, budget_seconds);
        if (carousel_cmd->parsed()) return run_carousel(geometry_path, rule, n_param);
        if (classify->parsed()) return run_classify(scene_path);
        if (realize->parsed()) {
            if (class_name.empty() || class_name[0] != 'S') {
                throw std::invalid_argument("--class expects S1..S38");
            }
            class_id = std::stoi(class_name.substr(1));
            if (class_id < 1 || class_id > 38) throw std::invalid_argument("--class expects S1..S38");
            return run_realize(class_id, budget, resolve_seed(ci, seed), out_path);
        }
        if (thm1->parsed()) return run_fuzz(false, trials, resolve_seed(ci, seed), margin);
        if (thm2->parsed()) return run_fuzz(true, trials, resolve_seed(ci, seed), margin);
        if (app.get_subcommand("counterexample")->parsed()) return run_counterexample();
        if (sweep->parsed()) return run_sweep(sweep_n);
        if (render->parsed()) return run_render(scene_path, out_path, regions);
        if (app.get_subcommand("class-table")->parsed()) {
            Json table = class_table_to_json();
            if (!out_path.empty()) save_json_file(out_path, table);
            std::cout << table.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
