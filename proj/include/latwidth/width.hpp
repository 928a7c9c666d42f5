#pragma once

#include <optional>
#include <vector>

#include "latwidth/lattice_core.hpp"

namespace latwidth {

struct WidthResult {
    Coord width = 0;
    // Every width direction up to sign, sign-normalized, in scan order.
    // Empty for a single point; the one perpendicular direction for a segment.
    std::vector<Direction> directions;
};

struct SizeResult {
    Coord size = 0;
    // Places the polygon inside [0,size]^2.
    UnimodularMap witness;
};

// max - min of <V,v> over the vertices. Accepts non-primitive vectors too.
Coord width_in_direction(const Polygon& p, Point v);
Coord width_in_direction(const Polygon& p, Direction v);

// Deterministic order used whenever directions are listed or scanned:
// by |x|+|y|, then larger x first, then smaller y first.
bool scan_order_less(Direction a, Direction b);

// All sign-normalized primitive v with width_in_direction(p, v) <= bound, in
// scan order. Requires a two-dimensional polygon.
std::vector<Direction> directions_within(const Polygon& p, Coord bound);

WidthResult lattice_width(const Polygon& p);

// A unimodular map placing p inside [0,side]^2, if one exists.
std::optional<UnimodularMap> fit_in_square(const Polygon& p, Coord side);

SizeResult lattice_size_square(const Polygon& p);

// Map into [0,d]^2 with d = lattice width, or nullopt when the lattice size
// with respect to the unit square exceeds the width.
std::optional<UnimodularMap> embed_in_square(const Polygon& p);

}  // namespace latwidth
