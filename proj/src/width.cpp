#include "latwidth/width.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <tuple>

namespace latwidth {

namespace {

// Integers y with |a + c*y| <= bound, for c != 0.
std::pair<Coord, Coord> strip_interval(Coord a, Coord c, Coord bound) {
    if (c < 0) {
        a = -a;
        c = -c;
    }
    return {ceil_div(checked_sub(-bound, a), c), floor_div(checked_sub(bound, a), c)};
}

std::pair<Coord, Coord> dot_range(const Polygon& p, Point v) {
    Coord lo = dot(p.vertex(0), v), hi = lo;
    for (const Point& q : p.vertices()) {
        const Coord t = dot(q, v);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return {lo, hi};
}

UnimodularMap map_from_rows(const Polygon& p, Point row1, Point row2) {
    UnimodularMap m{row1.x, row1.y, row2.x, row2.y, 0, 0};
    m.bx = -dot_range(p, row1).first;
    m.by = -dot_range(p, row2).first;
    return m;
}

}  // namespace

Coord width_in_direction(const Polygon& p, Point v) {
    const auto [lo, hi] = dot_range(p, v);
    return hi - lo;
}

Coord width_in_direction(const Polygon& p, Direction v) { return width_in_direction(p, v.vec()); }

bool scan_order_less(Direction a, Direction b) {
    const auto key = [](Direction d) {
        return std::make_tuple(std::llabs(d.x()) + std::llabs(d.y()), -d.x(), d.y());
    };
    return key(a) < key(b);
}

std::vector<Direction> directions_within(const Polygon& p, Coord bound) {
    if (p.dimension() < 2) throw OutOfRange("directions_within needs a two-dimensional polygon");

    // Any v with width <= bound has |<v,u>| <= bound for every difference u of
    // two vertices. Two independent differences bound a parallelogram; the one
    // with the largest determinant gives the smallest region.
    const Point origin = p.vertex(0);
    Point u1 = p.vertex(1) - origin, u2 = p.vertex(p.vertex_count() - 1) - origin;
    Coord best = std::llabs(cross(u1, u2));
    for (std::size_t i = 1; i < p.vertex_count(); ++i) {
        for (std::size_t j = i + 1; j < p.vertex_count(); ++j) {
            const Point a = p.vertex(i) - origin, b = p.vertex(j) - origin;
            const Coord c = std::llabs(cross(a, b));
            if (c > best) {
                best = c;
                u1 = a;
                u2 = b;
            }
        }
    }

    // v.x = (t1*u2.y - t2*u1.y) / det for |t1|,|t2| <= bound
    const Coord x_max = checked_mul(bound, std::llabs(u1.y) + std::llabs(u2.y)) / best;

    std::vector<Direction> out;
    for (Coord x = 0; x <= x_max; ++x) {
        Coord y_lo, y_hi;
        if (x == 0) {
            y_lo = y_hi = 1;  // (0,1) is the only sign-normalized primitive with x = 0
        } else {
            y_lo = std::numeric_limits<Coord>::min();
            y_hi = std::numeric_limits<Coord>::max();
        }
        bool feasible = true;
        for (const Point& u : {u1, u2}) {
            const Coord a = checked_mul(x, u.x);
            if (u.y == 0) {
                feasible = feasible && std::llabs(a) <= bound;
            } else {
                const auto [lo, hi] = strip_interval(a, u.y, bound);
                y_lo = std::max(y_lo, lo);
                y_hi = std::min(y_hi, hi);
            }
        }
        if (!feasible) continue;
        for (Coord y = y_lo; y <= y_hi; ++y) {
            if (!is_primitive({x, y})) continue;
            if (width_in_direction(p, Point{x, y}) <= bound) out.push_back(Direction::from_primitive(x, y));
        }
    }
    std::sort(out.begin(), out.end(), scan_order_less);
    return out;
}

WidthResult lattice_width(const Polygon& p) {
    WidthResult r;
    if (p.dimension() == 0) return r;
    if (p.dimension() == 1) {
        const Direction e = make_primitive(p.vertex(1) - p.vertex(0));
        r.directions.push_back(Direction::from_primitive(-e.y(), e.x()).sign_normalized());
        return r;
    }
    const Coord w0 = std::min(width_in_direction(p, Point{1, 0}), width_in_direction(p, Point{0, 1}));
    const auto candidates = directions_within(p, w0);
    r.width = w0;
    for (const Direction& v : candidates) r.width = std::min(r.width, width_in_direction(p, v));
    for (const Direction& v : candidates) {
        if (width_in_direction(p, v) == r.width) r.directions.push_back(v);
    }
    return r;
}

std::optional<UnimodularMap> fit_in_square(const Polygon& p, Coord side) {
    if (side < 0) return std::nullopt;
    if (p.dimension() == 0) return UnimodularMap::translation(-p.vertex(0));
    if (p.dimension() == 1) {
        const Point e = p.vertex(1) - p.vertex(0);
        if (lattice_length(e) > side) return std::nullopt;
        const Direction dir = make_primitive(e);
        // first row measures along the segment, second row is constant on it
        const Point along = basis_complement(dir);
        return map_from_rows(p, {-along.y, along.x}, {-dir.y(), dir.x()});
    }
    const auto candidates = directions_within(p, side);
    for (const Direction& v : candidates) {
        for (const Direction& w : candidates) {
            const Coord c = cross(v.vec(), w.vec());
            if (c == 1 || c == -1) return map_from_rows(p, v.vec(), w.vec());
        }
    }
    return std::nullopt;
}

SizeResult lattice_size_square(const Polygon& p) {
    if (p.dimension() == 0) return {0, *fit_in_square(p, 0)};
    if (p.dimension() == 1) {
        const Coord g = lattice_length(p.vertex(1) - p.vertex(0));
        return {g, *fit_in_square(p, g)};
    }
    const Coord upper = std::max(width_in_direction(p, Point{1, 0}), width_in_direction(p, Point{0, 1}));
    for (Coord s = lattice_width(p).width; s < upper; ++s) {
        if (auto m = fit_in_square(p, s)) return {s, *m};
    }
    return {upper, *fit_in_square(p, upper)};
}

std::optional<UnimodularMap> embed_in_square(const Polygon& p) { return fit_in_square(p, lattice_width(p).width); }

}  // namespace latwidth
