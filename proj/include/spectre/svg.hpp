#pragma once

// SVG rendering. Exact coordinates meet floating point only here.

#include <map>
#include <optional>
#include <string>

#include "spectre/curve.hpp"
#include "spectre/tiles.hpp"

namespace spectre {

struct RenderStyle {
    double stroke_width = 0.06;
    double scale = 30.0;
    std::map<std::string, std::string> fill;  // by shape name / "even" / "odd" / "mystic"
    bool color_by_parity = false;
    bool mystic_shading = false;  // darker fill for flagged tiles
    std::optional<CurveSpec> curve;  // replace Tile(1,1) edges for display
    CurveScheme scheme = CurveScheme::SCurve;

    static RenderStyle defaults();
};

std::string render_svg(const Patch& patch, const RenderStyle& style,
                       const std::vector<int>* mystic_flags = nullptr);

}  // namespace spectre
