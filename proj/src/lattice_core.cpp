#include "latwidth/lattice_core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <utility>

namespace latwidth {

Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

Coord checked_sub(Coord a, Coord b) {
    Coord r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}

Coord floor_div(Coord a, Coord b) {
    Coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

Point operator+(Point a, Point b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
Point operator-(Point a, Point b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
Point operator-(Point a) { return {checked_sub(0, a.x), checked_sub(0, a.y)}; }
Point operator*(Coord k, Point a) { return {checked_mul(k, a.x), checked_mul(k, a.y)}; }

Coord dot(Point a, Point b) { return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)); }

Coord cross(Point a, Point b) { return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x)); }

Coord cross(Point origin, Point a, Point b) { return cross(a - origin, b - origin); }

Coord lattice_length(Point v) { return std::gcd(v.x, v.y); }

std::ostream& operator<<(std::ostream& os, Point p) { return os << '(' << p.x << ',' << p.y << ')'; }

bool is_primitive(Point v) { return lattice_length(v) == 1; }

Direction Direction::from_primitive(Coord x, Coord y) {
    if (!is_primitive({x, y})) throw OutOfRange("not a primitive vector");
    return Direction({x, y});
}

Direction Direction::sign_normalized() const {
    if (v_.x > 0 || (v_.x == 0 && v_.y > 0)) return *this;
    return Direction(-v_);
}

Direction make_primitive(Point v) {
    if (v.x == 0 && v.y == 0) throw ZeroVector();
    const Coord g = lattice_length(v);
    return Direction::from_primitive(v.x / g, v.y / g);
}

Point basis_complement(Direction e) {
    // extended Euclid on (|x|,|y|): s*x + t*y == 1
    Coord r0 = e.x() < 0 ? -e.x() : e.x(), r1 = e.y() < 0 ? -e.y() : e.y();
    Coord s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Coord q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const Coord s = e.x() < 0 ? -s0 : s0;
    const Coord t = e.y() < 0 ? -t0 : t0;
    return {-t, s};
}

std::ostream& operator<<(std::ostream& os, Direction d) { return os << d.vec(); }

Coord UnimodularMap::det() const { return checked_sub(checked_mul(a11, a22), checked_mul(a12, a21)); }

void UnimodularMap::validate() const {
    const Coord d = det();
    if (d != 1 && d != -1) throw NotUnimodular("matrix determinant is " + std::to_string(d));
}

Point UnimodularMap::apply_linear(Point v) const {
    return {checked_add(checked_mul(a11, v.x), checked_mul(a12, v.y)),
            checked_add(checked_mul(a21, v.x), checked_mul(a22, v.y))};
}

Point UnimodularMap::apply(Point p) const { return apply_linear(p) + Point{bx, by}; }

UnimodularMap invert_map(const UnimodularMap& m) {
    m.validate();
    const Coord d = m.det();  // d == 1/d for d = +-1
    UnimodularMap inv{d * m.a22, -d * m.a12, -d * m.a21, d * m.a11, 0, 0};
    const Point b = -inv.apply_linear({m.bx, m.by});
    inv.bx = b.x;
    inv.by = b.y;
    return inv;
}

UnimodularMap compose(const UnimodularMap& outer, const UnimodularMap& inner) {
    UnimodularMap r;
    r.a11 = checked_add(checked_mul(outer.a11, inner.a11), checked_mul(outer.a12, inner.a21));
    r.a12 = checked_add(checked_mul(outer.a11, inner.a12), checked_mul(outer.a12, inner.a22));
    r.a21 = checked_add(checked_mul(outer.a21, inner.a11), checked_mul(outer.a22, inner.a21));
    r.a22 = checked_add(checked_mul(outer.a21, inner.a12), checked_mul(outer.a22, inner.a22));
    const Point b = outer.apply({inner.bx, inner.by});
    r.bx = b.x;
    r.by = b.y;
    return r;
}

std::ostream& operator<<(std::ostream& os, const UnimodularMap& m) {
    return os << "[[" << m.a11 << ',' << m.a12 << "],[" << m.a21 << ',' << m.a22 << "]]+(" << m.bx << ','
              << m.by << ')';
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

PointSet PointSet::without(Point p) const {
    PointSet r;
    r.points_.reserve(points_.size());
    std::copy_if(points_.begin(), points_.end(), std::back_inserter(r.points_), [&](Point q) { return q != p; });
    return r;
}

int Polygon::dimension() const { return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1; }

bool Polygon::has_vertex(Point p) const { return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end(); }

// Andrew's monotone chain; strict turns drop collinear boundary points.
Polygon convex_hull(std::span<const Point> points) {
    if (points.empty()) throw EmptyInput();
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return Polygon(std::move(pts));

    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    // all points collinear: the chain degenerates to [first, last]
    if (hull.size() < 3) return Polygon({pts.front(), pts.back()});
    return Polygon(std::move(hull));
}

Polygon convex_hull(const PointSet& points) { return convex_hull(points.points()); }

Polygon convex_hull(std::initializer_list<Point> points) {
    return convex_hull(std::span<const Point>(points.begin(), points.size()));
}

PointSet lattice_points(const Polygon& p) {
    const auto v = p.vertices();
    std::vector<Point> out;
    if (p.dimension() == 0) {
        out.push_back(v[0]);
    } else if (p.dimension() == 1) {
        const Point e = v[1] - v[0];
        const Coord g = lattice_length(e);
        const Point step{e.x / g, e.y / g};
        for (Coord k = 0; k <= g; ++k) out.push_back(v[0] + k * step);
    } else {
        Coord xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
        for (const Point& q : v) {
            xmin = std::min(xmin, q.x);
            xmax = std::max(xmax, q.x);
            ymin = std::min(ymin, q.y);
            ymax = std::max(ymax, q.y);
        }
        for (Coord x = xmin; x <= xmax; ++x) {
            for (Coord y = ymin; y <= ymax; ++y) {
                if (contains(p, {x, y})) out.push_back({x, y});
            }
        }
    }
    return PointSet(std::move(out));
}

Coord doubled_area(const Polygon& p) {
    if (p.dimension() < 2) return 0;
    const auto v = p.vertices();
    Coord s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = checked_add(s, cross(v[i], v[(i + 1) % v.size()]));
    return s;
}

Coord boundary_point_count(const Polygon& p) {
    const auto v = p.vertices();
    if (p.dimension() == 0) return 1;
    if (p.dimension() == 1) return lattice_length(v[1] - v[0]) + 1;
    Coord s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = checked_add(s, lattice_length(v[(i + 1) % v.size()] - v[i]));
    return s;
}

bool contains(const Polygon& p, Point q) {
    const auto v = p.vertices();
    if (p.dimension() == 0) return q == v[0];
    if (p.dimension() == 1) {
        if (cross(v[0], v[1], q) != 0) return false;
        return std::min(v[0], v[1]) <= q && q <= std::max(v[0], v[1]);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], q) < 0) return false;
    }
    return true;
}

Polygon apply_map(const UnimodularMap& m, const Polygon& p) {
    m.validate();
    std::vector<Point> image;
    image.reserve(p.vertex_count());
    for (const Point& q : p.vertices()) image.push_back(m.apply(q));
    return convex_hull(image);
}

std::ostream& operator<<(std::ostream& os, const Polygon& p) {
    os << '[';
    for (std::size_t i = 0; i < p.vertex_count(); ++i) os << (i ? "," : "") << p.vertex(i);
    return os << ']';
}

}  // namespace latwidth
