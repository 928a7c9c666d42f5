#include "latwidth/minimal.hpp"

#include <algorithm>
#include <sstream>

#include "latwidth/width.hpp"

namespace latwidth {

namespace {

Polygon drop_from(const PointSet& points, Point vertex) { return convex_hull(points.without(vertex)); }

}  // namespace

Polygon drop_vertex(const Polygon& p, Point vertex) {
    if (!p.has_vertex(vertex)) {
        std::ostringstream os;
        os << vertex << " is not a vertex";
        throw NotAVertex(os.str());
    }
    return drop_from(lattice_points(p), vertex);
}

MinimalityReport is_minimal(const Polygon& p) {
    MinimalityReport r;
    if (p.dimension() == 0) {
        r.is_minimal = true;
        return r;
    }
    if (p.dimension() == 1) {
        r.offending_vertex = p.vertex(0);
        return r;
    }
    r.width = lattice_width(p).width;
    const PointSet points = lattice_points(p);
    for (const Point& v : p.vertices()) {
        if (lattice_width(drop_from(points, v)).width < r.width) continue;
        if (!r.offending_vertex || v < *r.offending_vertex) r.offending_vertex = v;
    }
    r.is_minimal = !r.offending_vertex.has_value();
    return r;
}

Polygon upsilon(Coord d) {
    if (d < 2) throw OutOfRange("upsilon needs d >= 2");
    return convex_hull({{0, 0}, {1, d}, {d, 1}});
}

std::optional<UpsilonWitness> upsilon_lemma_witness(const Polygon& p) {
    const Coord d = lattice_width(p).width;
    if (d <= 0) throw OutOfRange("upsilon_lemma_witness needs lattice width > 0");
    const PointSet points = lattice_points(p);
    for (const Point& v : p.vertices()) {
        const Polygon dropped = drop_from(points, v);
        std::vector<Direction> candidates;
        if (dropped.dimension() == 2) {
            candidates = directions_within(dropped, d - 1);
        } else {
            // A one-dimensional p_P forces d <= 1, so only the direction
            // constant on p_P can have width below d.
            candidates = lattice_width(dropped).directions;
        }
        for (const Direction& dir : candidates) {
            const Coord dropped_width = width_in_direction(dropped, dir);
            if (dropped_width < d && dropped_width < width_in_direction(p, dir) - 1) return UpsilonWitness{v, dir};
        }
    }
    return std::nullopt;
}

}  // namespace latwidth
