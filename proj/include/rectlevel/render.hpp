#pragma once

#include <string>

#include "rectlevel/geometry.hpp"

namespace rectlevel {

struct RenderOptions {
    bool show_lines = false;  // dashed piercing lines with labels
    int k = 0;                // vertices of depth <= k drawn as dots
};

// Deterministic standalone SVG 1.1 document: rectangle outlines, optional
// piercing lines, depth-colored vertex dots, viewport fitted to the
// bounding box with a 5% margin. Same input yields identical bytes.
std::string render_svg(const Family& f, const RenderOptions& options = {});

}  // namespace rectlevel
