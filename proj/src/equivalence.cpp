#include "latwidth/equivalence.hpp"

#include <algorithm>

namespace latwidth {

namespace {

constexpr UnimodularMap kMirror{1, 0, 0, -1, 0, 0};

// Linear map sending e to (1,0) and f into the open upper half-plane, with
// the image (a,b) of f reduced to 0 <= a < b.
UnimodularMap normalizing_linear_map(Direction e, Direction f) {
    const Point w = basis_complement(e);
    Point r1{w.y, -w.x};
    Point r2{-e.y(), e.x()};
    Coord b = dot(r2, f.vec());
    if (b < 0) {
        r2 = -r2;
        b = -b;
    }
    const Coord k = floor_div(dot(r1, f.vec()), b);
    r1 = r1 - k * r2;
    return {r1.x, r1.y, r2.x, r2.y, 0, 0};
}

std::vector<Point> cycle_from_origin(const Polygon& image) {
    std::vector<Point> v(image.vertices().begin(), image.vertices().end());
    const auto it = std::find(v.begin(), v.end(), Point{0, 0});
    std::rotate(v.begin(), it, v.end());
    return v;
}

Canonicalization make_result(std::vector<Point> vertices, const UnimodularMap& map) {
    Canonicalization c;
    c.form.byte_key = byte_key(vertices);
    c.form.vertices = std::move(vertices);
    c.map = map;
    return c;
}

// Translation part chosen so that `anchor` lands on the origin.
UnimodularMap anchored(UnimodularMap linear, Point anchor) {
    const Point b = -linear.apply(anchor);
    linear.bx = checked_add(linear.bx, b.x);
    linear.by = checked_add(linear.by, b.y);
    return linear;
}

}  // namespace

std::string byte_key(std::span<const Point> vertices) {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vertices[i].x);
        s += ',';
        s += std::to_string(vertices[i].y);
    }
    return s;
}

std::vector<Canonicalization> canonical_candidates(const Polygon& p) {
    std::vector<Canonicalization> out;
    if (p.dimension() == 0) {
        out.push_back(make_result({{0, 0}}, UnimodularMap::translation(-p.vertex(0))));
        return out;
    }
    if (p.dimension() == 1) {
        const Point e = p.vertex(1) - p.vertex(0);
        const Direction dir = make_primitive(e);
        const Point w = basis_complement(dir);
        const UnimodularMap linear{w.y, -w.x, -dir.y(), dir.x(), 0, 0};
        out.push_back(make_result({{0, 0}, {lattice_length(e), 0}}, anchored(linear, p.vertex(0))));
        return out;
    }

    for (const UnimodularMap& orientation : {UnimodularMap::identity(), kMirror}) {
        const Polygon q = apply_map(orientation, p);
        const std::size_t n = q.vertex_count();
        for (std::size_t i = 0; i < n; ++i) {
            const Point v = q.vertex(i);
            const Direction to_next = make_primitive(q.vertex((i + 1) % n) - v);
            const Direction to_prev = make_primitive(q.vertex((i + n - 1) % n) - v);
            for (const auto& [e, f] : {std::pair{to_next, to_prev}, std::pair{to_prev, to_next}}) {
                const UnimodularMap local = anchored(normalizing_linear_map(e, f), v);
                const UnimodularMap total = compose(local, orientation);
                out.push_back(make_result(cycle_from_origin(apply_map(local, q)), total));
            }
        }
    }
    return out;
}

Canonicalization canonicalize(const Polygon& p) {
    auto candidates = canonical_candidates(p);
    auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.form.vertices < b.form.vertices;
    });
    return std::move(*best);
}

CanonicalForm canonical_form(const Polygon& p) { return canonicalize(p).form; }

std::optional<UnimodularMap> are_equivalent(const Polygon& p, const Polygon& q) {
    const Canonicalization cp = canonicalize(p);
    const Canonicalization cq = canonicalize(q);
    if (!(cp.form == cq.form)) return std::nullopt;
    return compose(invert_map(cq.map), cp.map);
}

}  // namespace latwidth
