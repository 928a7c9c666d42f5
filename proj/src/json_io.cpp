#include "latwidth/json_io.hpp"

#include <cstdlib>

namespace latwidth {

Polygon polygon_from_json(const Json& j, Coord max_abs) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw ParseError("expected an object with a \"vertices\" array");
    }
    std::vector<Point> pts;
    for (const Json& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw ParseError("each vertex must be an [x, y] pair of integers");
        }
        // values beyond int64 arrive as unsigned and are rejected by the guard
        if (v[0].is_number_unsigned() && v[0].get<std::uint64_t>() > static_cast<std::uint64_t>(max_abs)) {
            throw OverflowGuard("coordinate exceeds the input limit");
        }
        if (v[1].is_number_unsigned() && v[1].get<std::uint64_t>() > static_cast<std::uint64_t>(max_abs)) {
            throw OverflowGuard("coordinate exceeds the input limit");
        }
        const Point p{v[0].get<Coord>(), v[1].get<Coord>()};
        if (std::llabs(p.x) > max_abs || std::llabs(p.y) > max_abs) {
            throw OverflowGuard("coordinate exceeds the input limit of " + std::to_string(max_abs));
        }
        pts.push_back(p);
    }
    if (pts.empty()) throw ParseError("polygon has no vertices");
    return convex_hull(pts);
}

Polygon read_polygon(std::string_view text, Coord max_abs) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return polygon_from_json(j, max_abs);
}

Json points_to_json(std::span<const Point> points) {
    Json arr = Json::array();
    for (const Point& p : points) arr.push_back(Json::array({p.x, p.y}));
    return arr;
}

Json polygon_to_json(const Polygon& p) {
    Json j;
    j["vertices"] = points_to_json(p.vertices());
    return j;
}

std::string write_polygon(const Polygon& p) { return polygon_to_json(p).dump() + "\n"; }

Json to_json(Direction d) { return Json::array({d.x(), d.y()}); }

Json to_json(const UnimodularMap& m) {
    Json j;
    j["matrix"] = Json::array({Json::array({m.a11, m.a12}), Json::array({m.a21, m.a22})});
    j["translation"] = Json::array({m.bx, m.by});
    return j;
}

Json to_json(const TypeParams& p) {
    Json j = Json::object();
    const auto names = p.names();
    for (std::size_t i = 0; i < names.size(); ++i) j[std::string(names[i])] = p.values[i];
    return j;
}

Json to_json(const MinimalClass& c) {
    Json j;
    j["key"] = c.canonical.byte_key;
    j["tag"] = c.params ? Json(std::string(to_string(c.params->tag))) : Json(nullptr);
    j["d"] = c.d;
    j["params"] = c.params ? to_json(*c.params) : Json(nullptr);
    j["point_count"] = c.point_count;
    j["doubled_area"] = c.doubled_area;
    j["vertices"] = points_to_json(c.canonical.vertices);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["bound"] = r.bound;
    j["d"] = r.d;
    j["bound_value"] = r.bound_value;
    j["achieved"] = r.achieved;
    j["witnesses"] = r.witnesses;
    j["holds"] = r.holds;
    j["attained"] = r.attained;
    return j;
}

Json to_json(const TypeStats& s) {
    Json j;
    j["tuples"] = s.tuples;
    j["accepted"] = s.accepted;
    j["not_minimal"] = s.not_minimal;
    j["minimal_wrong_width"] = s.minimal_wrong_width;
    j["collisions"] = s.collisions;
    j["classes"] = s.classes;
    return j;
}

}  // namespace latwidth
