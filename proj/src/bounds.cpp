#include "latwidth/bounds.hpp"

#include <algorithm>
#include <random>

#include "latwidth/width.hpp"

namespace latwidth {

namespace {

void check_enumerable(Coord d, Coord lowest) {
    if (d < lowest || d > kMaxGeneratorWidth) {
        throw OutOfRange("bound verification needs " + std::to_string(lowest) + " <= d <= " +
                         std::to_string(kMaxGeneratorWidth));
    }
}

}  // namespace

Coord point_bound(Coord d) {
    if (d < 2) throw OutOfRange("the point bound needs d >= 2");
    const Coord quad = checked_add(checked_mul(d - 1, d - 1), 4);
    const Coord simplex = checked_mul(d + 1, d + 2) / 2;
    return std::max(quad, simplex);
}

Coord doubled_volume_bound(Coord d) {
    if (d < 1) throw OutOfRange("the volume bound needs d >= 1");
    const Coord s = checked_mul(3, checked_mul(d, d));
    return d % 2 == 0 ? s / 4 : (s + 1) / 4;
}

BoundReport point_bound_report(Coord d, std::span<const MinimalClass> classes) {
    BoundReport r;
    r.bound = "point";
    r.d = d;
    r.bound_value = point_bound(d);
    r.holds = true;
    for (const MinimalClass& c : classes) {
        r.achieved = std::max(r.achieved, c.point_count);
        if (c.point_count > r.bound_value) r.holds = false;
    }
    for (const MinimalClass& c : classes) {
        if (c.point_count == r.achieved) r.witnesses.push_back(c.canonical.byte_key);
    }
    r.attained = !classes.empty() && r.achieved == r.bound_value;
    return r;
}

BoundReport volume_bound_report(Coord d, std::span<const MinimalClass> classes) {
    BoundReport r;
    r.bound = "volume";
    r.d = d;
    r.bound_value = doubled_volume_bound(d);
    r.holds = true;
    if (!classes.empty()) r.achieved = classes.front().doubled_area;
    for (const MinimalClass& c : classes) {
        r.achieved = std::min(r.achieved, c.doubled_area);
        if (c.doubled_area < r.bound_value) r.holds = false;
    }
    for (const MinimalClass& c : classes) {
        if (c.doubled_area == r.achieved) r.witnesses.push_back(c.canonical.byte_key);
    }
    r.attained = !classes.empty() && r.achieved == r.bound_value;
    return r;
}

BoundReport verify_point_bound(Coord d) {
    check_enumerable(d, 2);
    return point_bound_report(d, enumerate_minimal(d));
}

BoundReport verify_volume_bound(Coord d) {
    check_enumerable(d, 1);
    return volume_bound_report(d, enumerate_minimal(d));
}

SpotCheck spot_check_volume_bound(std::size_t samples, Coord box, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Coord> coord(0, box);
    std::uniform_int_distribution<int> count(3, 8);
    SpotCheck s;
    while (s.checked < samples) {
        std::vector<Point> pts(static_cast<std::size_t>(count(rng)));
        for (Point& p : pts) p = {coord(rng), coord(rng)};
        const Polygon p = convex_hull(pts);
        const Coord w = lattice_width(p).width;
        if (w < 1) continue;
        ++s.checked;
        if (doubled_area(p) < doubled_volume_bound(w)) ++s.violations;
    }
    return s;
}

}  // namespace latwidth
