#pragma once

#include <optional>
#include <string>

#include "apollonian/packing.hpp"

namespace apollonian::render {

struct Viewport {
    double xmin, ymin, xmax, ymax;
};

struct RenderSpec {
    std::optional<Viewport> viewport;  // auto-fitted from the circles if unset
    double stroke_width = 0.005;
    bool curvature_labels = false;
    std::size_t max_circles = 200000;
    double pixels = 800;  // output width in SVG user units
};

/// Deterministic SVG: one element per circle, lines clipped to the viewport,
/// optional integer curvature labels at centers. The y axis points up.
std::string packing_to_svg(const packing::Packing& p, const RenderSpec& spec = {});

}  // namespace apollonian::render
