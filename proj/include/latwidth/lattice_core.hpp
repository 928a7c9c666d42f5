#pragma once

// Exact integer primitives for planar lattice geometry: points, primitive
// directions, unimodular maps, convex lattice polygons and their lattice
// points. All arithmetic is 64-bit with overflow checks.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "latwidth/error.hpp"

namespace latwidth {

using Coord = std::int64_t;

Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);
// Division rounding toward -infinity / +infinity; b != 0.
Coord floor_div(Coord a, Coord b);
Coord ceil_div(Coord a, Coord b);

// Integer pair. Used both for lattice points and for difference vectors.
struct Point {
    Coord x = 0;
    Coord y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

Point operator+(Point a, Point b);
Point operator-(Point a, Point b);
Point operator-(Point a);
Point operator*(Coord k, Point a);

Coord dot(Point a, Point b);
// z-component of a x b; positive when b is counterclockwise of a.
Coord cross(Point a, Point b);
Coord cross(Point origin, Point a, Point b);
// Number of lattice steps along a vector, i.e. gcd(|x|,|y|).
Coord lattice_length(Point v);

std::ostream& operator<<(std::ostream& os, Point p);

// Non-zero primitive integer vector.
class Direction {
public:
    // Throws OutOfRange unless (x,y) is primitive.
    static Direction from_primitive(Coord x, Coord y);

    Coord x() const { return v_.x; }
    Coord y() const { return v_.y; }
    Point vec() const { return v_; }

    // Representative of {v,-v} with x > 0, or x = 0 and y > 0.
    Direction sign_normalized() const;

    friend auto operator<=>(const Direction&, const Direction&) = default;

private:
    explicit Direction(Point v) : v_(v) {}
    Point v_;
};

Direction make_primitive(Point v);
bool is_primitive(Point v);
// Some w with cross(e, w) == 1, so that (e, w) is a lattice basis.
Point basis_complement(Direction e);

std::ostream& operator<<(std::ostream& os, Direction d);

// x -> A x + b with integer A of determinant +-1.
struct UnimodularMap {
    Coord a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    Coord bx = 0, by = 0;

    static UnimodularMap identity() { return {}; }
    static UnimodularMap translation(Point b) { return {1, 0, 0, 1, b.x, b.y}; }

    Coord det() const;
    // Throws NotUnimodular when |det| != 1.
    void validate() const;

    Point apply(Point p) const;
    // Linear part only.
    Point apply_linear(Point v) const;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

UnimodularMap invert_map(const UnimodularMap& m);
// (outer o inner)(p) = outer(inner(p))
UnimodularMap compose(const UnimodularMap& outer, const UnimodularMap& inner);

std::ostream& operator<<(std::ostream& os, const UnimodularMap& m);

// Finite set of lattice points, kept sorted and duplicate-free.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    std::span<const Point> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(Point p) const;
    PointSet without(Point p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

// Convex lattice polygon stored as the counterclockwise cycle of its extreme
// points, starting at the lexicographically smallest one. Points and segments
// are valid polygons of dimension 0 and 1.
class Polygon {
public:
    std::span<const Point> vertices() const& { return vertices_; }
    // Temporaries hand over their storage so range-for over them stays valid.
    std::vector<Point> vertices() && { return std::move(vertices_); }
    std::size_t vertex_count() const { return vertices_.size(); }
    int dimension() const;
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    bool has_vertex(Point p) const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    friend Polygon convex_hull(std::span<const Point> points);
    explicit Polygon(std::vector<Point> v) : vertices_(std::move(v)) {}
    std::vector<Point> vertices_;
};

// Throws EmptyInput for an empty input.
Polygon convex_hull(std::span<const Point> points);
Polygon convex_hull(const PointSet& points);
Polygon convex_hull(std::initializer_list<Point> points);

PointSet lattice_points(const Polygon& p);
Coord doubled_area(const Polygon& p);
// Lattice points on the boundary (sum of edge lattice lengths).
Coord boundary_point_count(const Polygon& p);
bool contains(const Polygon& p, Point q);

Polygon apply_map(const UnimodularMap& m, const Polygon& p);

std::ostream& operator<<(std::ostream& os, const Polygon& p);

}  // namespace latwidth
