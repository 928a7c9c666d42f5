#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latwidth/classify.hpp"

namespace latwidth {

struct BoundReport {
    std::string bound;  // "point" or "volume"
    Coord d = 0;
    Coord bound_value = 0;
    // Largest point count (point bound) or smallest doubled area (volume bound).
    Coord achieved = 0;
    // Canonical keys of the classes attaining `achieved`.
    std::vector<std::string> witnesses;
    // Every class respects the bound.
    bool holds = false;
    // achieved == bound_value
    bool attained = false;
};

// max((d-1)^2 + 4, (d+1)(d+2)/2) for d >= 2. Throws OutOfRange.
Coord point_bound(Coord d);

// Doubled-area lower bound 3d^2/4 (even d) or (3d^2+1)/4 (odd d), d >= 1.
Coord doubled_volume_bound(Coord d);

// Aggregate over an already enumerated class list of width d.
BoundReport point_bound_report(Coord d, std::span<const MinimalClass> classes);
BoundReport volume_bound_report(Coord d, std::span<const MinimalClass> classes);

// Enumerate width d and check the bound. d must be within kMaxGeneratorWidth.
BoundReport verify_point_bound(Coord d);
BoundReport verify_volume_bound(Coord d);

struct SpotCheck {
    std::size_t checked = 0;
    std::size_t violations = 0;
};

// Random lattice polygons with coordinates in [0, box]: checks
// doubled_area >= doubled_volume_bound(lw) for every sample with lw >= 1.
SpotCheck spot_check_volume_bound(std::size_t samples, Coord box, std::uint64_t seed);

}  // namespace latwidth
