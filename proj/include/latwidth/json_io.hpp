#pragma once

// JSON encodings shared by the CLI and the tests. Keys are emitted in a fixed
// order so that outputs are byte-stable.

#include <string>
#include <string_view>

#include <json.hpp>

#include "latwidth/bounds.hpp"
#include "latwidth/classify.hpp"
#include "latwidth/lattice_core.hpp"
#include "latwidth/minimal.hpp"
#include "latwidth/width.hpp"

namespace latwidth {

using Json = nlohmann::ordered_json;

inline constexpr Coord kMaxInputCoordinate = 1'000'000;

// Accepts {"vertices": [[x,y], ...]} with any point list and returns its hull.
// Throws ParseError on malformed input and OverflowGuard when a coordinate
// exceeds max_abs in absolute value.
Polygon polygon_from_json(const Json& j, Coord max_abs = kMaxInputCoordinate);
Polygon read_polygon(std::string_view text, Coord max_abs = kMaxInputCoordinate);

Json points_to_json(std::span<const Point> points);
Json polygon_to_json(const Polygon& p);
std::string write_polygon(const Polygon& p);

Json to_json(Direction d);
Json to_json(const UnimodularMap& m);
Json to_json(const TypeParams& p);
Json to_json(const MinimalClass& c);
Json to_json(const BoundReport& r);
Json to_json(const TypeStats& s);

}  // namespace latwidth
