#pragma once

// SVG figure emission: the unit scene box maps to a fixed 800x800 viewport
// with the y axis flipped, so figures stay byte-stable across runs.

#include <string>

#include "carousel/scene.hpp"

namespace carousel {

struct RenderOptions {
    bool regions = false;  // shade the corner areas of a three-circle scene
};

std::string render_scene_svg(const Scene& scene, const RenderOptions& options = {});

}  // namespace carousel
