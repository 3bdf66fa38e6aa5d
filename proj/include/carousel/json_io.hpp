#pragma once

// File formats: geometry files (closed sets or implications), scene files,
// fuzz reports, and the class-table fixture export.

#include <string>

#include "carousel/closure.hpp"
#include "carousel/harness.hpp"
#include "carousel/scene.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace carousel {

using Json = nlohmann::json;

// {"elements": [...], "closed_sets": [[...], ...]} or
// {"elements": [...], "implications": [{"lhs": [...], "rhs": [...]}, ...]};
// exactly one of closed_sets/implications must be present.
ClosedFamily geometry_from_json(const Json& j);
Json geometry_to_json(const ClosedFamily& family);
ClosedFamily load_geometry(const std::string& path);

// {"tolerance": 1e-9, "circles": [{"name": "x", "c": [x, y], "r": r}, ...],
//  "triangle": [[ax,ay],[bx,by],[cx,cy]]} with triangle optional.
Scene scene_from_json(const Json& j);
Json scene_to_json(const Scene& scene);
Scene load_scene(const std::string& path);

Json fuzz_report_to_json(const FuzzReport& report);
Json class_table_to_json();
Json cdim_result_to_json(const ConvexDimensionResult& result, const GroundSet& ground);
Json carousel_verdict_to_json(const CarouselVerdict& verdict, const GroundSet& ground);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace carousel
