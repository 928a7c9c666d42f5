#pragma once

#include <optional>
#include <string>

#include "latwidth/lattice_core.hpp"

namespace latwidth {

struct SvgStyle {
    int pitch = 40;  // pixels per lattice step
    std::string fill = "#4a7ab5";
    std::string stroke = "#1f3f66";
    double fill_opacity = 0.3;
    bool show_grid = true;
};

// Largest bounding-box side (in lattice steps) render_svg accepts.
inline constexpr Coord kMaxPlotExtent = 200;

// Lattice dots, the polygon with its lattice points marked, the square
// [0,d]^2 for d = lw(p), and optionally the hexagon H_l dashed.
// Output bytes depend only on the arguments.
std::string render_svg(const Polygon& p, std::optional<Coord> hexagon_ell, const SvgStyle& style = {});

}  // namespace latwidth
