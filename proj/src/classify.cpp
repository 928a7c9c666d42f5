#include "latwidth/classify.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "latwidth/minimal.hpp"
#include "latwidth/width.hpp"

namespace latwidth {

namespace {

constexpr std::array<std::string_view, 2> kT1Names{"x", "y"};
constexpr std::array<std::string_view, 4> kT2Names{"x1", "x2", "y1", "y2"};
constexpr std::array<std::string_view, 4> kT3Names{"l", "x", "y", "z"};
constexpr std::array<std::string_view, 5> kT4Names{"l", "y", "z", "x", "z'"};
constexpr std::array<std::string_view, 7> kT5Names{"l", "x1", "y2", "z1", "x2", "y1", "z2"};

bool in(Coord v, Coord lo, Coord hi) { return lo <= v && v <= hi; }

bool ranges_hold(const TypeParams& p) {
    const Coord d = p.d;
    if (d < 0 || p.values.size() != param_names(p.tag).size()) return false;
    const auto& v = p.values;
    switch (p.tag) {
        case TypeTag::T1:
            return in(v[0], 0, d) && in(v[1], 0, d) && v[0] + v[1] <= d;
        case TypeTag::T2: {
            const Coord x1 = v[0], x2 = v[1], y1 = v[2], y2 = v[3];
            for (Coord c : v) {
                if (!in(c, 1, d - 1)) return false;
            }
            return std::max(x2, y2) >= std::min(x1, y1) && std::max(d - x2, y1) >= std::min(d - x1, y2);
        }
        case TypeTag::T3: {
            const Coord l = v[0];
            return in(l, 2, d - 2) && in(v[1], 1, d - l - 1) && in(v[2], 1, l - 1) && in(v[3], 1, l - 1);
        }
        case TypeTag::T4: {
            const Coord l = v[0];
            return in(l, 2, d - 2) && in(v[1], 1, l - 1) && in(v[2], 1, l - 1) && in(v[3], 1, d - l - 1) &&
                   in(v[4], 1, d - l - 1);
        }
        case TypeTag::T5: {
            const Coord l = v[0];
            return in(l, 2, d - 2) && in(v[1], 1, l - 1) && in(v[2], 1, l - 1) && in(v[3], 1, l - 1) &&
                   in(v[4], 1, d - l - 1) && in(v[5], 1, d - l - 1) && in(v[6], 1, d - l - 1);
        }
    }
    return false;
}

TypeParams checked(TypeParams p) {
    validate(p);
    return p;
}

}  // namespace

std::string_view to_string(TypeTag tag) {
    switch (tag) {
        case TypeTag::T1: return "T1";
        case TypeTag::T2: return "T2";
        case TypeTag::T3: return "T3";
        case TypeTag::T4: return "T4";
        case TypeTag::T5: return "T5";
    }
    return "?";
}

std::optional<TypeTag> parse_type_tag(std::string_view s) {
    for (TypeTag t : {TypeTag::T1, TypeTag::T2, TypeTag::T3, TypeTag::T4, TypeTag::T5}) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

std::span<const std::string_view> param_names(TypeTag tag) {
    switch (tag) {
        case TypeTag::T1: return kT1Names;
        case TypeTag::T2: return kT2Names;
        case TypeTag::T3: return kT3Names;
        case TypeTag::T4: return kT4Names;
        case TypeTag::T5: return kT5Names;
    }
    return {};
}

std::span<const std::string_view> TypeParams::names() const { return param_names(tag); }

Coord TypeParams::get(std::string_view name) const {
    const auto n = names();
    const auto it = std::find(n.begin(), n.end(), name);
    if (it == n.end() || values.size() != n.size()) {
        throw ParamOutOfRange("no parameter " + std::string(name) + " for " + std::string(to_string(tag)));
    }
    return values[static_cast<std::size_t>(it - n.begin())];
}

std::optional<Coord> TypeParams::hexagon_ell() const {
    switch (tag) {
        case TypeTag::T1:
            if (values == std::vector<Coord>{d, 0}) return d;
            if (values == std::vector<Coord>{0, d}) return 0;
            return std::nullopt;
        case TypeTag::T3:
        case TypeTag::T4:
        case TypeTag::T5:
            return values[0];
        default:
            return std::nullopt;
    }
}

void validate(const TypeParams& params) {
    if (!ranges_hold(params)) {
        std::string s = std::string(to_string(params.tag)) + " d=" + std::to_string(params.d);
        for (Coord v : params.values) s += " " + std::to_string(v);
        throw ParamOutOfRange("parameters out of range: " + s);
    }
}

TypeParams make_t1(Coord d, Coord x, Coord y) { return checked({TypeTag::T1, d, {x, y}}); }

TypeParams make_t2(Coord d, Coord x1, Coord x2, Coord y1, Coord y2) {
    return checked({TypeTag::T2, d, {x1, x2, y1, y2}});
}

TypeParams make_t3(Coord d, Coord l, Coord x, Coord y, Coord z) { return checked({TypeTag::T3, d, {l, x, y, z}}); }

TypeParams make_t4(Coord d, Coord l, Coord y, Coord z, Coord x, Coord z_prime) {
    return checked({TypeTag::T4, d, {l, y, z, x, z_prime}});
}

TypeParams make_t5(Coord d, Coord l, Coord x1, Coord y2, Coord z1, Coord x2, Coord y1, Coord z2) {
    return checked({TypeTag::T5, d, {l, x1, y2, z1, x2, y1, z2}});
}

Polygon generate(const TypeParams& params) {
    validate(params);
    const Coord d = params.d;
    const auto& v = params.values;
    switch (params.tag) {
        case TypeTag::T1:
            return convex_hull({{0, 0}, {d, v[1]}, {v[0], d}});
        case TypeTag::T2:
            return convex_hull({{v[0], 0}, {d, v[3]}, {v[1], d}, {0, v[2]}});
        case TypeTag::T3: {
            const Coord l = v[0], x = v[1], y = v[2], z = v[3];
            return convex_hull({{0, 0}, {l, 0}, {d, y + d - l}, {x + l, d}, {z, z + d - l}});
        }
        case TypeTag::T4: {
            const Coord l = v[0], y = v[1], z = v[2], x = v[3], zp = v[4];
            return convex_hull({{0, 0}, {zp + l, zp}, {d, y + d - l}, {x + l, d}, {z, z + d - l}});
        }
        case TypeTag::T5: {
            const Coord l = v[0], x1 = v[1], y2 = v[2], z1 = v[3], x2 = v[4], y1 = v[5], z2 = v[6];
            return convex_hull(
                {{x1, 0}, {z2 + l, z2}, {d, d - l + y2}, {x2 + l, d}, {z1, z1 + d - l}, {0, y1}});
        }
    }
    throw ParamOutOfRange("unknown tag");
}

std::vector<TypeParams> parameter_space(Coord d) {
    std::vector<TypeParams> out;
    const auto push = [&](TypeTag tag, std::vector<Coord> values) {
        TypeParams p{tag, d, std::move(values)};
        if (ranges_hold(p)) out.push_back(std::move(p));
    };
    for (Coord x = 0; x <= d; ++x)
        for (Coord y = 0; x + y <= d; ++y) push(TypeTag::T1, {x, y});
    for (Coord x1 = 1; x1 < d; ++x1)
        for (Coord x2 = 1; x2 < d; ++x2)
            for (Coord y1 = 1; y1 < d; ++y1)
                for (Coord y2 = 1; y2 < d; ++y2) push(TypeTag::T2, {x1, x2, y1, y2});
    for (Coord l = 2; l <= d - 2; ++l) {
        const Coord a = l - 1, b = d - l - 1;  // sizes of {1..l-1} and {1..d-l-1}
        for (Coord x = 1; x <= b; ++x)
            for (Coord y = 1; y <= a; ++y)
                for (Coord z = 1; z <= a; ++z) push(TypeTag::T3, {l, x, y, z});
    }
    for (Coord l = 2; l <= d - 2; ++l) {
        const Coord a = l - 1, b = d - l - 1;
        for (Coord y = 1; y <= a; ++y)
            for (Coord z = 1; z <= a; ++z)
                for (Coord x = 1; x <= b; ++x)
                    for (Coord zp = 1; zp <= b; ++zp) push(TypeTag::T4, {l, y, z, x, zp});
    }
    for (Coord l = 2; l <= d - 2; ++l) {
        const Coord a = l - 1, b = d - l - 1;
        for (Coord x1 = 1; x1 <= a; ++x1)
            for (Coord y2 = 1; y2 <= a; ++y2)
                for (Coord z1 = 1; z1 <= a; ++z1)
                    for (Coord x2 = 1; x2 <= b; ++x2)
                        for (Coord y1 = 1; y1 <= b; ++y1)
                            for (Coord z2 = 1; z2 <= b; ++z2) push(TypeTag::T5, {l, x1, y2, z1, x2, y1, z2});
    }
    return out;
}

Polygon hexagon(Coord d, Coord ell) {
    if (d < 0 || ell < 0 || ell > d) throw ParamOutOfRange("hexagon needs 0 <= l <= d");
    return convex_hull({{0, 0}, {ell, 0}, {d, d - ell}, {d, d}, {ell, d}, {0, d - ell}});
}

bool is_inscribed_in_hexagon(const Polygon& p, Coord d, Coord ell) {
    const Polygon h = hexagon(d, ell);
    for (const Point& v : p.vertices()) {
        if (!contains(h, v)) return false;
    }
    const std::array<Point, 6> corners{{{0, 0}, {ell, 0}, {d, d - ell}, {d, d}, {ell, d}, {0, d - ell}}};
    const PointSet points = lattice_points(p);
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const Polygon side = convex_hull({corners[i], corners[(i + 1) % corners.size()]});
        const bool touched =
            std::any_of(points.begin(), points.end(), [&](Point q) { return contains(side, q); });
        if (!touched) return false;
    }
    return true;
}

Polygon four_direction_quadrangle(Coord d) {
    if (d < 2 || d % 2 != 0) throw OutOfRange("four_direction_quadrangle needs even d >= 2");
    const Coord h = d / 2;
    return convex_hull({{h, 0}, {0, h}, {h, d}, {d, h}});
}

Polygon MinimalClass::representative() const {
    if (params) return generate(*params);
    return convex_hull(std::span<const Point>(canonical.vertices));
}

bool class_order_less(const MinimalClass& a, const MinimalClass& b) {
    if (a.point_count != b.point_count) return a.point_count < b.point_count;
    return a.canonical.byte_key < b.canonical.byte_key;
}

namespace {

MinimalClass make_class(const Polygon& p, Coord d, std::optional<TypeParams> params) {
    MinimalClass c;
    c.canonical = canonical_form(p);
    c.params = std::move(params);
    c.d = d;
    c.point_count = static_cast<Coord>(lattice_points(p).size());
    c.doubled_area = doubled_area(p);
    return c;
}

}  // namespace

CandidateResult evaluate_candidate(const TypeParams& params) {
    CandidateResult r{params, Verdict::NotMinimal, std::nullopt};
    const Polygon p = generate(params);
    const MinimalityReport report = is_minimal(p);
    if (!report.is_minimal) return r;
    if (report.width != params.d) {
        r.verdict = Verdict::MinimalWrongWidth;
        return r;
    }
    r.verdict = Verdict::Accepted;
    r.cls = make_class(p, params.d, params);
    return r;
}

Enumeration merge_candidates(Coord d, std::span<const CandidateResult> results) {
    Enumeration e;
    e.d = d;
    std::unordered_map<std::string, MinimalClass> best;
    std::map<TypeTag, std::unordered_map<std::string, int>> seen_per_tag;
    std::size_t accepted = 0;
    for (const CandidateResult& r : results) {
        TypeStats& s = e.stats[r.params.tag];
        ++s.tuples;
        switch (r.verdict) {
            case Verdict::NotMinimal: ++s.not_minimal; continue;
            case Verdict::MinimalWrongWidth: ++s.minimal_wrong_width; continue;
            case Verdict::Accepted: break;
        }
        ++s.accepted;
        ++accepted;
        const MinimalClass& c = *r.cls;
        if (seen_per_tag[r.params.tag][c.canonical.byte_key]++ > 0) ++s.collisions;
        auto [it, inserted] = best.try_emplace(c.canonical.byte_key, c);
        if (!inserted && *c.params < *it->second.params) it->second = c;
    }
    e.collisions = accepted - best.size();
    for (auto& [key, c] : best) {
        ++e.stats[c.params->tag].classes;
        e.classes.push_back(std::move(c));
    }
    std::sort(e.classes.begin(), e.classes.end(), class_order_less);
    return e;
}

Enumeration enumerate_minimal_detailed(Coord d) {
    if (d < 0 || d > kMaxGeneratorWidth) {
        throw OutOfRange("enumeration needs 0 <= d <= " + std::to_string(kMaxGeneratorWidth));
    }
    std::vector<CandidateResult> results;
    for (const TypeParams& p : parameter_space(d)) results.push_back(evaluate_candidate(p));
    return merge_candidates(d, results);
}

std::vector<MinimalClass> enumerate_minimal(Coord d) { return enumerate_minimal_detailed(d).classes; }

namespace {

// Depth-first growth of convex cycles from their lexicographically smallest
// vertex. Successive vertices turn strictly left and advance strictly in
// polar angle around the start, so every convex polygon is met once.
void grow_cycles(std::span<const Point> grid, std::vector<Point>& path, std::vector<Polygon>& out) {
    const Point start = path.front();
    const Point last = path.back();
    const Point prev = path[path.size() - 2];
    if (path.size() >= 3 && cross(prev, last, start) > 0 && cross(last, start, path[1]) > 0) {
        out.push_back(convex_hull(std::span<const Point>(path)));
    }
    for (const Point& c : grid) {
        if (!(start < c)) continue;
        if (cross(prev, last, c) <= 0 || cross(start, last, c) <= 0) continue;
        path.push_back(c);
        grow_cycles(grid, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Polygon> polygons_in_square(Coord d) {
    if (d < 0 || d > kMaxOracleWidth) {
        throw OutOfRange("exhaustive search needs 0 <= d <= " + std::to_string(kMaxOracleWidth));
    }
    std::vector<Point> grid;
    for (Coord x = 0; x <= d; ++x)
        for (Coord y = 0; y <= d; ++y) grid.push_back({x, y});

    std::vector<Polygon> out;
    std::vector<Point> path;
    for (const Point& s : grid) {
        out.push_back(convex_hull({s}));
        for (const Point& t : grid) {
            if (!(s < t)) continue;
            out.push_back(convex_hull({s, t}));
            path = {s, t};
            grow_cycles(grid, path, out);
        }
    }
    return out;
}

std::optional<MinimalClass> oracle_candidate(const Polygon& p, Coord d) {
    const MinimalityReport report = is_minimal(p);
    if (!report.is_minimal || report.width != d) return std::nullopt;
    return make_class(p, d, std::nullopt);
}

std::vector<MinimalClass> merge_oracle(std::span<const MinimalClass> found) {
    std::unordered_map<std::string, MinimalClass> unique;
    for (const MinimalClass& c : found) unique.try_emplace(c.canonical.byte_key, c);
    std::vector<MinimalClass> out;
    for (auto& [key, c] : unique) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), class_order_less);
    return out;
}

std::vector<MinimalClass> brute_force_minimal(Coord d) {
    std::vector<MinimalClass> found;
    for (const Polygon& p : polygons_in_square(d)) {
        if (lattice_width(p).width != d) continue;
        if (auto c = oracle_candidate(p, d)) found.push_back(std::move(*c));
    }
    return merge_oracle(found);
}

namespace {

using ClassTable = std::unordered_map<std::string, MinimalClass>;

std::shared_ptr<const ClassTable> table_for(Coord d) {
    static std::mutex mutex;
    static std::map<Coord, std::shared_ptr<const ClassTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[d];
    if (!slot) {
        auto table = std::make_shared<ClassTable>();
        for (MinimalClass& c : enumerate_minimal(d)) table->emplace(c.canonical.byte_key, std::move(c));
        slot = std::move(table);
    }
    return slot;
}

}  // namespace

std::optional<Classification> classify_polygon(const Polygon& p) {
    const MinimalityReport report = is_minimal(p);
    if (!report.is_minimal) return std::nullopt;
    const auto table = table_for(report.width);
    const Canonicalization canon = canonicalize(p);
    const auto it = table->find(canon.form.byte_key);
    if (it == table->end()) throw Error("minimal polygon missing from the classification table: " + canon.form.byte_key);
    const MinimalClass& cls = it->second;
    const auto witness = are_equivalent(p, cls.representative());
    return Classification{cls, *witness};
}

}  // namespace latwidth
