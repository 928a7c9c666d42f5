#include <doctest.h>

#include "latwidth/lattice_core.hpp"
#include "support/generators.hpp"

using namespace latwidth;
using latwidth::testing::Rng;

namespace {

std::vector<Point> verts(const Polygon& p) { return {p.vertices().begin(), p.vertices().end()}; }

}  // namespace

TEST_CASE("make_primitive divides by the gcd") {
    CHECK(make_primitive({4, 6}) == Direction::from_primitive(2, 3));
    CHECK(make_primitive({0, 5}) == Direction::from_primitive(0, 1));
    CHECK(make_primitive({-3, 0}) == Direction::from_primitive(-1, 0));
    CHECK_THROWS_AS(make_primitive({0, 0}), ZeroVector);
    CHECK_THROWS_AS(Direction::from_primitive(2, 4), OutOfRange);
}

TEST_CASE("sign normalization picks x > 0, or x == 0 and y > 0") {
    CHECK(Direction::from_primitive(-1, 2).sign_normalized() == Direction::from_primitive(1, -2));
    CHECK(Direction::from_primitive(0, -1).sign_normalized() == Direction::from_primitive(0, 1));
    CHECK(Direction::from_primitive(3, -1).sign_normalized() == Direction::from_primitive(3, -1));
}

TEST_CASE("basis_complement completes a lattice basis") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Direction e = rng.direction(50);
        CHECK(cross(e.vec(), basis_complement(e)) == 1);
    }
}

TEST_CASE("checked arithmetic reports overflow") {
    const Coord big = std::numeric_limits<Coord>::max();
    CHECK_THROWS_AS(checked_add(big, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), ArithmeticOverflow);
    CHECK_THROWS_AS(cross(Point{big, 0}, Point{0, 2}), ArithmeticOverflow);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(7, -2) == -4);
}

TEST_CASE("convex_hull") {
    SUBCASE("single point") {
        const Polygon p = convex_hull({{0, 0}});
        CHECK(p.dimension() == 0);
        CHECK(verts(p) == std::vector<Point>{{0, 0}});
    }
    SUBCASE("collinear points give a segment") {
        const Polygon p = convex_hull({{0, 0}, {1, 0}, {2, 0}});
        CHECK(p.dimension() == 1);
        CHECK(verts(p) == std::vector<Point>{{0, 0}, {2, 0}});
    }
    SUBCASE("boundary points are not vertices") {
        const Polygon p = convex_hull({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
        CHECK(p.dimension() == 2);
        CHECK(verts(p) == std::vector<Point>{{0, 0}, {2, 0}, {0, 2}});
    }
    SUBCASE("cycle starts at the lexicographically smallest vertex, counterclockwise") {
        const Polygon p = convex_hull({{3, 3}, {1, 0}, {0, 2}, {2, 2}, {1, 0}});
        CHECK(verts(p) == std::vector<Point>{{0, 2}, {1, 0}, {3, 3}});
        CHECK(doubled_area(p) > 0);
    }
    SUBCASE("empty input") { CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), EmptyInput); }
}

TEST_CASE("lattice_points") {
    CHECK(lattice_points(convex_hull({{0, 0}, {2, 0}, {0, 2}})).size() == 6);
    CHECK(lattice_points(convex_hull({{3, 5}})) == PointSet({{3, 5}}));
    // frozen from the triangle-fan oracle
    CHECK(lattice_points(convex_hull({{0, 0}, {1, 2}, {2, 1}})) == PointSet({{0, 0}, {1, 1}, {1, 2}, {2, 1}}));
    CHECK(lattice_points(convex_hull({{0, 0}, {4, 2}})) == PointSet({{0, 0}, {2, 1}, {4, 2}}));

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Polygon p = rng.polygon2d(-6, 6);
        const auto expected = latwidth::testing::fan_lattice_points(p);
        const PointSet got = lattice_points(p);
        CHECK(std::vector<Point>(got.begin(), got.end()) == std::vector<Point>(expected.begin(), expected.end()));
    }
}

TEST_CASE("doubled_area") {
    CHECK(doubled_area(convex_hull({{0, 0}, {4, 2}, {2, 4}})) == 12);
    CHECK(doubled_area(convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 2);
    CHECK(doubled_area(convex_hull({{0, 0}, {5, 0}})) == 0);
}

TEST_CASE("apply_map") {
    const Polygon tri = convex_hull({{0, 0}, {2, 0}, {0, 2}});
    CHECK(apply_map(UnimodularMap::identity(), tri) == tri);

    const UnimodularMap shear{1, 0, -1, 1, 0, 0};  // (x,y) -> (x, y - x)
    CHECK(apply_map(shear, convex_hull({{0, 0}, {1, 4}, {3, 4}})) == convex_hull({{0, 0}, {1, 3}, {3, 1}}));

    const UnimodularMap flip{1, 0, 0, -1, 0, 0};
    CHECK(apply_map(flip, tri) == convex_hull({{0, 0}, {2, 0}, {0, -2}}));
    CHECK(verts(apply_map(flip, tri)) == std::vector<Point>{{0, -2}, {2, 0}, {0, 0}});

    CHECK_THROWS_AS(apply_map(UnimodularMap{2, 0, 0, 1, 0, 0}, tri), NotUnimodular);
}

TEST_CASE("invert_map") {
    CHECK(invert_map(UnimodularMap::identity()) == UnimodularMap::identity());
    CHECK(invert_map(UnimodularMap{1, 1, 0, 1, 0, 0}) == UnimodularMap{1, -1, 0, 1, 0, 0});
    CHECK(invert_map(UnimodularMap{0, 1, 1, 0, 2, 3}) == UnimodularMap{0, 1, 1, 0, -3, -2});
}

TEST_CASE("Pick's theorem holds on random polygons") {
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        const Polygon p = rng.polygon2d(-20, 20);
        const Coord n = static_cast<Coord>(lattice_points(p).size());
        const Coord b = boundary_point_count(p);
        REQUIRE(doubled_area(p) % 2 == (b % 2));
        CHECK(2 * n == doubled_area(p) + b + 2);
    }
}

TEST_CASE("hull of the lattice points reproduces the polygon") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const Polygon p = rng.polygon2d(-10, 10);
        CHECK(convex_hull(lattice_points(p)) == p);
    }
}

TEST_CASE("unimodular maps preserve area and point counts; inverses undo them") {
    Rng rng(29);
    for (int i = 0; i < 1000; ++i) {
        const Polygon p = rng.polygon2d(-10, 10);
        const UnimodularMap m = rng.unimodular();
        const Polygon q = apply_map(m, p);
        CHECK(doubled_area(q) == doubled_area(p));
        CHECK(lattice_points(q).size() == lattice_points(p).size());
        CHECK(apply_map(invert_map(m), q) == p);
        const Point probe{rng.uniform(-50, 50), rng.uniform(-50, 50)};
        CHECK(invert_map(m).apply(m.apply(probe)) == probe);
        CHECK(compose(invert_map(m), m) == UnimodularMap::identity());
    }
}

TEST_CASE("contains handles every dimension") {
    CHECK(contains(convex_hull({{1, 1}}), {1, 1}));
    CHECK_FALSE(contains(convex_hull({{1, 1}}), {1, 2}));
    const Polygon seg = convex_hull({{0, 0}, {4, 2}});
    CHECK(contains(seg, {2, 1}));
    CHECK_FALSE(contains(seg, {6, 3}));
    CHECK_FALSE(contains(seg, {1, 1}));
}
