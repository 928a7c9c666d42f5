#pragma once

// The five parameterized families of minimal polygons of lattice width d,
// the circumscribing hexagon H_l, and two independent enumerators of the
// minimal polygons of a given width up to unimodular equivalence: one driven
// by the families, one by exhaustive search inside [0,d]^2.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latwidth/equivalence.hpp"
#include "latwidth/lattice_core.hpp"

namespace latwidth {

enum class TypeTag { T1 = 1, T2, T3, T4, T5 };

std::string_view to_string(TypeTag tag);
std::optional<TypeTag> parse_type_tag(std::string_view s);

// Widest d accepted by the family-driven enumerator.
inline constexpr Coord kMaxGeneratorWidth = 12;
// Widest d accepted by the exhaustive oracle.
inline constexpr Coord kMaxOracleWidth = 4;

// One parameter tuple of one family. `values` follows param_names(tag):
//   T1: x, y
//   T2: x1, x2, y1, y2
//   T3: l, x, y, z
//   T4: l, y, z, x, z'
//   T5: l, x1, y2, z1, x2, y1, z2
struct TypeParams {
    TypeTag tag = TypeTag::T1;
    Coord d = 0;
    std::vector<Coord> values;

    std::span<const std::string_view> names() const;
    Coord get(std::string_view name) const;

    // The hexagon parameter l when the polygon is inscribed in H_l: the l
    // parameter for T3-T5, l = d for T1 (x,y) = (d,0) and l = 0 for (0,d).
    std::optional<Coord> hexagon_ell() const;

    friend auto operator<=>(const TypeParams&, const TypeParams&) = default;
};

std::span<const std::string_view> param_names(TypeTag tag);

TypeParams make_t1(Coord d, Coord x, Coord y);
TypeParams make_t2(Coord d, Coord x1, Coord x2, Coord y1, Coord y2);
TypeParams make_t3(Coord d, Coord l, Coord x, Coord y, Coord z);
TypeParams make_t4(Coord d, Coord l, Coord y, Coord z, Coord x, Coord z_prime);
TypeParams make_t5(Coord d, Coord l, Coord x1, Coord y2, Coord z1, Coord x2, Coord y1, Coord z2);

// Throws ParamOutOfRange unless the tuple satisfies its family's ranges.
void validate(const TypeParams& params);

Polygon generate(const TypeParams& params);

// Every in-range tuple of every family for width d, ordered by (tag, values).
std::vector<TypeParams> parameter_space(Coord d);

Polygon hexagon(Coord d, Coord ell);
// p lies in H_l and each of the six sides of H_l (degenerate sides are
// single points) contains a lattice point of p.
bool is_inscribed_in_hexagon(const Polygon& p, Coord d, Coord ell);

// conv{(d/2,0),(0,d/2),(d/2,d),(d,d/2)}, the only minimal polygon with four
// width directions. Requires even d >= 2.
Polygon four_direction_quadrangle(Coord d);

struct MinimalClass {
    CanonicalForm canonical;
    // Smallest (tag, values) generating this class; absent for oracle output.
    std::optional<TypeParams> params;
    Coord d = 0;
    Coord point_count = 0;
    Coord doubled_area = 0;

    // generate(*params) when known, the canonical polygon otherwise.
    Polygon representative() const;
};

// Ordering of enumeration output: (point_count, byte_key).
bool class_order_less(const MinimalClass& a, const MinimalClass& b);

enum class Verdict { Accepted, NotMinimal, MinimalWrongWidth };

struct CandidateResult {
    TypeParams params;
    Verdict verdict = Verdict::NotMinimal;
    std::optional<MinimalClass> cls;
};

CandidateResult evaluate_candidate(const TypeParams& params);

struct TypeStats {
    std::size_t tuples = 0;
    std::size_t not_minimal = 0;
    std::size_t minimal_wrong_width = 0;
    std::size_t accepted = 0;
    // accepted tuples landing on a class another tuple of the same tag already hit
    std::size_t collisions = 0;
    // distinct classes whose smallest generating tuple has this tag
    std::size_t classes = 0;
};

struct Enumeration {
    Coord d = 0;
    std::vector<MinimalClass> classes;
    std::map<TypeTag, TypeStats> stats;
    // accepted tuples minus distinct classes, over all families
    std::size_t collisions = 0;
};

// Deduplicates by canonical key keeping the smallest (tag, values), and sorts.
Enumeration merge_candidates(Coord d, std::span<const CandidateResult> results);

Enumeration enumerate_minimal_detailed(Coord d);
std::vector<MinimalClass> enumerate_minimal(Coord d);

// All convex lattice polygons (including points and segments) with vertices
// in [0,d]^2, each exactly once. Requires 0 <= d <= kMaxOracleWidth.
std::vector<Polygon> polygons_in_square(Coord d);

// Class of p when p has lattice width d and is minimal.
std::optional<MinimalClass> oracle_candidate(const Polygon& p, Coord d);
std::vector<MinimalClass> merge_oracle(std::span<const MinimalClass> found);
std::vector<MinimalClass> brute_force_minimal(Coord d);

struct Classification {
    MinimalClass cls;
    // apply_map(witness, p) == cls.representative()
    UnimodularMap witness;
};

// nullopt when p is not minimal. Builds and memoizes the family-driven table
// for lw(p) on first use; throws OutOfRange beyond kMaxGeneratorWidth.
std::optional<Classification> classify_polygon(const Polygon& p);

}  // namespace latwidth
