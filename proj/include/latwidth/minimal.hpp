#pragma once

#include <optional>

#include "latwidth/lattice_core.hpp"

namespace latwidth {

struct MinimalityReport {
    bool is_minimal = false;
    // Lexicographically smallest vertex P with lw(p_P) == lw(p), when not minimal.
    std::optional<Point> offending_vertex;
    Coord width = 0;
};

// Hull of all lattice points of p except the vertex `vertex`.
// Throws NotAVertex. Throws EmptyInput when p is that single point.
Polygon drop_vertex(const Polygon& p, Point vertex);

MinimalityReport is_minimal(const Polygon& p);

// conv{(0,0),(1,d),(d,1)} for d >= 2 (the triangle of lattice width d that
// is the exceptional case of the vertex-deletion lemma). Throws OutOfRange.
Polygon upsilon(Coord d);

struct UpsilonWitness {
    Point vertex;
    Direction direction;
};

// Some vertex P and direction v with lw_v(p_P) < d and lw_v(p_P) < lw_v(p) - 1,
// where d = lw(p) > 0. Polygons admitting one are equivalent to upsilon(d).
std::optional<UpsilonWitness> upsilon_lemma_witness(const Polygon& p);

}  // namespace latwidth
