#include <doctest.h>

#include <set>

#include "latwidth/classify.hpp"
#include "latwidth/minimal.hpp"
#include "latwidth/width.hpp"
#include "support/generators.hpp"

using namespace latwidth;
using latwidth::testing::Rng;

namespace {

std::set<std::string> keys(const std::vector<MinimalClass>& classes) {
    std::set<std::string> s;
    for (const auto& c : classes) s.insert(c.canonical.byte_key);
    return s;
}

std::size_t max_vertices(TypeTag tag) {
    switch (tag) {
        case TypeTag::T1: return 3;
        case TypeTag::T2: return 4;
        case TypeTag::T3:
        case TypeTag::T4: return 5;
        case TypeTag::T5: return 6;
    }
    return 0;
}

// Frozen from brute_force_minimal, which runs before and independently of the
// family-driven enumerator.
constexpr std::array<std::size_t, 5> kOracleClassCounts{1, 1, 4, 7, 22};
// Regression values from the first run of enumerate_minimal for d = 5..12.
constexpr std::array<std::size_t, 8> kGeneratorClassCounts{47, 126, 271, 628, 1285, 2656, 5063, 9498};

}  // namespace

TEST_CASE("generate") {
    CHECK(generate(make_t1(3, 0, 0)) == convex_hull({{0, 0}, {3, 0}, {0, 3}}));
    CHECK(generate(make_t2(4, 1, 3, 3, 1)) == convex_hull({{1, 0}, {4, 1}, {3, 4}, {0, 3}}));
    CHECK(generate(make_t1(4, 2, 2)) == convex_hull({{0, 0}, {4, 2}, {2, 4}}));
    CHECK(generate(make_t1(0, 0, 0)) == convex_hull({{0, 0}}));
    CHECK(generate(make_t5(4, 2, 1, 1, 1, 1, 1, 1)) ==
          convex_hull({{1, 0}, {3, 1}, {4, 3}, {3, 4}, {1, 3}, {0, 1}}));
    CHECK(generate(make_t3(5, 2, 2, 1, 1)) == convex_hull({{0, 0}, {2, 0}, {5, 4}, {4, 5}, {1, 4}}));
}

TEST_CASE("parameter ranges are enforced") {
    CHECK_THROWS_AS(make_t1(3, 2, 2), ParamOutOfRange);
    CHECK_THROWS_AS(make_t2(4, 0, 1, 1, 1), ParamOutOfRange);
    // max(x2,y2) >= min(x1,y1) fails
    CHECK_THROWS_AS(make_t2(6, 3, 1, 3, 1), ParamOutOfRange);
    CHECK_THROWS_AS(make_t3(4, 1, 1, 1, 1), ParamOutOfRange);
    CHECK_THROWS_AS(make_t4(5, 2, 2, 1, 1, 1), ParamOutOfRange);
    CHECK_THROWS_AS(make_t5(3, 2, 1, 1, 1, 1, 1, 1), ParamOutOfRange);
    CHECK_THROWS_AS(generate(TypeParams{TypeTag::T1, 2, {1}}), ParamOutOfRange);
}

TEST_CASE("parameter_space sizes") {
    const auto count = [](Coord d, TypeTag t) {
        const auto space = parameter_space(d);
        return std::count_if(space.begin(), space.end(), [&](const TypeParams& p) { return p.tag == t; });
    };
    // T1: pairs with x + y <= d; T3: (l-1)^2 (d-l-1) summed over l
    CHECK(count(4, TypeTag::T1) == 15);
    CHECK(count(6, TypeTag::T3) == 1 * 1 * 3 + 4 * 2 + 9 * 1);
    CHECK(count(6, TypeTag::T4) == 1 * 9 + 4 * 4 + 9 * 1);
    CHECK(count(6, TypeTag::T5) == 1 * 27 + 8 * 8 + 27 * 1);
    const auto space = parameter_space(7);
    CHECK(std::is_sorted(space.begin(), space.end()));
}

TEST_CASE("hexagon") {
    CHECK(hexagon(4, 2) == convex_hull({{0, 0}, {2, 0}, {4, 2}, {4, 4}, {2, 4}, {0, 2}}));
    CHECK(hexagon(3, 0) == convex_hull({{0, 0}, {3, 3}, {0, 3}}));
    CHECK(hexagon(2, 1) == convex_hull({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}));
    CHECK_THROWS_AS(hexagon(3, 4), ParamOutOfRange);
}

TEST_CASE("is_inscribed_in_hexagon") {
    CHECK(is_inscribed_in_hexagon(generate(make_t5(4, 2, 1, 1, 1, 1, 1, 1)), 4, 2));
    CHECK(is_inscribed_in_hexagon(generate(make_t1(2, 2, 0)), 2, 2));
    CHECK(is_inscribed_in_hexagon(generate(make_t1(2, 0, 2)), 2, 0));
    CHECK_FALSE(is_inscribed_in_hexagon(convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2, 1));
    CHECK(is_inscribed_in_hexagon(generate(make_t1(4, 2, 2)), 4, 2));
    CHECK_FALSE(is_inscribed_in_hexagon(generate(make_t1(4, 1, 2)), 4, 2));
}

TEST_CASE("four_direction_quadrangle") {
    CHECK(four_direction_quadrangle(2) == convex_hull({{1, 0}, {0, 1}, {1, 2}, {2, 1}}));
    CHECK(four_direction_quadrangle(4) == convex_hull({{2, 0}, {0, 2}, {2, 4}, {4, 2}}));
    CHECK_THROWS_AS(four_direction_quadrangle(3), OutOfRange);
    for (Coord d = 2; d <= 8; d += 2) CHECK(lattice_width(four_direction_quadrangle(d)).directions.size() == 4);
}

TEST_CASE("polygons_in_square lists each convex polygon once") {
    for (Coord d = 1; d <= 2; ++d) {
        std::vector<Point> grid;
        for (Coord x = 0; x <= d; ++x)
            for (Coord y = 0; y <= d; ++y) grid.push_back({x, y});
        std::set<std::vector<Point>> expected;
        for (std::uint32_t mask = 1; mask < (1u << grid.size()); ++mask) {
            std::vector<Point> sub;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (mask & (1u << i)) sub.push_back(grid[i]);
            }
            const Polygon p = convex_hull(sub);
            expected.insert({p.vertices().begin(), p.vertices().end()});
        }
        const auto got = polygons_in_square(d);
        std::set<std::vector<Point>> got_set;
        for (const Polygon& p : got) got_set.insert({p.vertices().begin(), p.vertices().end()});
        CHECK(got.size() == got_set.size());
        CHECK(got_set == expected);
    }
    CHECK(polygons_in_square(1).size() == 15);
    CHECK_THROWS_AS(polygons_in_square(5), OutOfRange);
}

TEST_CASE("enumerate_minimal on small widths") {
    const auto d0 = enumerate_minimal(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].canonical.vertices == std::vector<Point>{{0, 0}});

    const auto d1 = enumerate_minimal(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].canonical == canonical_form(convex_hull({{0, 0}, {1, 0}, {0, 1}})));
    CHECK(d1[0].params->tag == TypeTag::T1);

    CHECK_THROWS_AS(enumerate_minimal(kMaxGeneratorWidth + 1), OutOfRange);
}

TEST_CASE("oracle class counts and agreement for d <= 4") {
    for (Coord d = 0; d <= 4; ++d) {
        const auto oracle = brute_force_minimal(d);
        CHECK(oracle.size() == kOracleClassCounts[static_cast<std::size_t>(d)]);
        CHECK(keys(enumerate_minimal(d)) == keys(oracle));
    }
    CHECK_THROWS_AS(brute_force_minimal(5), OutOfRange);
}

TEST_CASE("generator class counts are stable") {
    for (Coord d = 5; d <= 10; ++d) {
        CHECK(enumerate_minimal(d).size() == kGeneratorClassCounts[static_cast<std::size_t>(d - 5)]);
    }
}

TEST_CASE("enumeration output is sorted and each class is consistent") {
    for (Coord d = 1; d <= 7; ++d) {
        const Enumeration e = enumerate_minimal_detailed(d);
        CHECK(std::is_sorted(e.classes.begin(), e.classes.end(), class_order_less));
        std::size_t accepted = 0;
        for (const auto& [tag, s] : e.stats) {
            CHECK(s.tuples == s.accepted + s.not_minimal + s.minimal_wrong_width);
            accepted += s.accepted;
        }
        CHECK(accepted - e.collisions == e.classes.size());
        for (const MinimalClass& c : e.classes) {
            const Polygon p = c.representative();
            CHECK(is_minimal(p).is_minimal);
            CHECK(lattice_width(p).width == d);
            CHECK(canonical_form(p) == c.canonical);
            CHECK(c.point_count == static_cast<Coord>(lattice_points(p).size()));
            CHECK(c.doubled_area == doubled_area(p));
            CHECK(p.vertex_count() <= max_vertices(c.params->tag));
            if (auto ell = c.params->hexagon_ell()) CHECK(is_inscribed_in_hexagon(p, d, *ell));
            if (d >= 1) {
                const WidthResult w = lattice_width(p);
                bool independent = false;
                for (const auto& a : w.directions)
                    for (const auto& b : w.directions) independent |= cross(a.vec(), b.vec()) != 0;
                CHECK(independent);
            }
        }
    }
}

TEST_CASE("every in-range tuple that is minimal has width d") {
    for (Coord d = 0; d <= 8; ++d) {
        const Enumeration e = enumerate_minimal_detailed(d);
        for (const auto& [tag, s] : e.stats) CHECK(s.minimal_wrong_width == 0);
    }
}

TEST_CASE("classify_polygon") {
    SUBCASE("simplex of width 3") {
        const auto c = classify_polygon(convex_hull({{0, 0}, {3, 0}, {0, 3}}));
        REQUIRE(c.has_value());
        CHECK(c->cls.params->tag == TypeTag::T1);
        CHECK(c->cls.params->values == std::vector<Coord>{0, 0});
        CHECK(apply_map(c->witness, convex_hull({{0, 0}, {3, 0}, {0, 3}})) == c->cls.representative());
    }
    SUBCASE("unit square is not minimal") {
        CHECK_FALSE(classify_polygon(convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).has_value());
    }
    SUBCASE("images of upsilon_2 are T1 with x = y = 1") {
        Rng rng(61);
        for (int i = 0; i < 50; ++i) {
            const Polygon p = apply_map(rng.unimodular(), upsilon(3));
            const auto c = classify_polygon(p);
            REQUIRE(c.has_value());
            CHECK(c->cls.params->tag == TypeTag::T1);
            CHECK(c->cls.params->values == std::vector<Coord>{1, 1});
            CHECK(apply_map(c->witness, p) == c->cls.representative());
        }
    }
    SUBCASE("generated T5 round-trips") {
        const auto c = classify_polygon(generate(make_t5(4, 2, 1, 1, 1, 1, 1, 1)));
        REQUIRE(c.has_value());
        CHECK(c->cls.params->tag == TypeTag::T5);
    }
}

TEST_CASE("four width directions force the quadrangle") {
    for (Coord d = 2; d <= 8; d += 2) {
        int found = 0;
        for (const MinimalClass& c : enumerate_minimal(d)) {
            if (lattice_width(c.representative()).directions.size() < 4) continue;
            ++found;
            CHECK(are_equivalent(c.representative(), four_direction_quadrangle(d)).has_value());
        }
        CHECK(found == 1);
    }
    for (Coord d = 1; d <= 7; d += 2) {
        for (const MinimalClass& c : enumerate_minimal(d)) CHECK(lattice_width(c.representative()).directions.size() < 4);
    }
}
