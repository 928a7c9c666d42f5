#include "verify_checks.hpp"

#include <set>
#include <sstream>

#include "latwidth/equivalence.hpp"
#include "latwidth/minimal.hpp"
#include "latwidth/width.hpp"

namespace latwidth::cli {

namespace {

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

CheckLine make(Coord d, std::string property, bool ok, std::string detail) {
    return {d, std::move(property), ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

CheckLine not_applicable(Coord d, std::string property, std::string detail) {
    return {d, std::move(property), Outcome::NotApplicable, std::move(detail)};
}

std::string bound_detail(const BoundReport& r) {
    std::ostringstream os;
    os << "achieved=" << r.achieved << " bound=" << r.bound_value << " witnesses=" << r.witnesses.size();
    return os.str();
}

}  // namespace

VerifyResult verify_width(Coord d, const std::vector<MinimalClass>& classes) {
    VerifyResult out;
    auto& lines = out.lines;

    if (d >= 2) {
        const BoundReport r = point_bound_report(d, classes);
        lines.push_back(make(d, "point-bound", r.holds && r.attained, bound_detail(r)));
        out.reports.push_back(r);
    } else {
        lines.push_back(not_applicable(d, "point-bound", "bound not applicable for d < 2"));
    }

    if (d >= 1) {
        const BoundReport r = volume_bound_report(d, classes);
        lines.push_back(make(d, "volume-bound", r.holds && r.attained, bound_detail(r)));
        out.reports.push_back(r);
        const SpotCheck s = spot_check_volume_bound(1000, 2 * d + 2, static_cast<std::uint64_t>(d));
        lines.push_back(make(d, "volume-bound-random", s.violations == 0,
                             "samples=" + std::to_string(s.checked) + " violations=" + std::to_string(s.violations)));
    } else {
        lines.push_back(not_applicable(d, "volume-bound", "bound not applicable for d < 1"));
    }

    std::size_t size_bad = 0, embed_bad = 0, directions_bad = 0, vertex_bad = 0, hex_bad = 0, hex_checked = 0;
    std::size_t four_dir = 0, four_dir_bad = 0;
    for (const MinimalClass& c : classes) {
        const Polygon p = c.representative();
        const WidthResult w = lattice_width(p);
        if (lattice_size_square(p).size != w.width) ++size_bad;
        const auto embed = embed_in_square(p);
        bool embedded = embed.has_value();
        if (embedded) {
            for (const Point& v : apply_map(*embed, p).vertices()) {
                embedded = embedded && v.x >= 0 && v.y >= 0 && v.x <= d && v.y <= d;
            }
        }
        if (!embedded) ++embed_bad;
        if (d >= 1) {
            bool independent = false;
            for (const auto& a : w.directions)
                for (const auto& b : w.directions) independent |= cross(a.vec(), b.vec()) != 0;
            if (!independent) ++directions_bad;
        }
        if (c.params) {
            if (p.vertex_count() > max_vertices(c.params->tag)) ++vertex_bad;
            if (auto ell = c.params->hexagon_ell()) {
                ++hex_checked;
                if (!is_inscribed_in_hexagon(p, d, *ell)) ++hex_bad;
            }
        }
        if (w.directions.size() >= 4) {
            ++four_dir;
            if (d % 2 != 0 || !are_equivalent(p, four_direction_quadrangle(d))) ++four_dir_bad;
        }
    }
    const auto count = [](std::size_t bad, std::size_t total) {
        return "violations=" + std::to_string(bad) + " classes=" + std::to_string(total);
    };
    lines.push_back(make(d, "lattice-size-equals-width", size_bad == 0 && embed_bad == 0,
                         count(size_bad + embed_bad, classes.size())));
    if (d >= 1) {
        lines.push_back(make(d, "two-width-directions", directions_bad == 0, count(directions_bad, classes.size())));
    }
    lines.push_back(make(d, "vertex-counts", vertex_bad == 0, count(vertex_bad, classes.size())));
    lines.push_back(make(d, "hexagon-inscription", hex_bad == 0, count(hex_bad, hex_checked)));
    if (d >= 2 && d % 2 == 0) {
        const bool quad_ok = lattice_width(four_direction_quadrangle(d)).directions.size() == 4;
        lines.push_back(make(d, "four-direction-rigidity", four_dir == 1 && four_dir_bad == 0 && quad_ok,
                             "classes-with-4-directions=" + std::to_string(four_dir)));
    } else {
        lines.push_back(make(d, "four-direction-rigidity", four_dir == 0,
                             "classes-with-4-directions=" + std::to_string(four_dir)));
    }

    if (d <= kMaxOracleWidth) {
        const auto oracle = brute_force_minimal(d);
        std::set<std::string> a, b;
        for (const auto& c : classes) a.insert(c.canonical.byte_key);
        for (const auto& c : oracle) b.insert(c.canonical.byte_key);
        lines.push_back(make(d, "oracle-agreement", a == b,
                             "generator=" + std::to_string(a.size()) + " oracle=" + std::to_string(b.size())));
        if (d >= 2) {
            std::size_t hits = 0, bad = 0;
            const Polygon target = upsilon(d);
            for (const Polygon& p : polygons_in_square(d)) {
                if (lattice_width(p).width != d || !upsilon_lemma_witness(p)) continue;
                ++hits;
                if (!are_equivalent(p, target)) ++bad;
            }
            lines.push_back(make(d, "upsilon-lemma", bad == 0,
                                 "witnessed=" + std::to_string(hits) + " violations=" + std::to_string(bad)));
        }
    }
    return out;
}

std::string format_line(const CheckLine& line) {
    std::ostringstream os;
    switch (line.outcome) {
        case Outcome::Pass: os << "PASS"; break;
        case Outcome::Fail: os << "FAIL"; break;
        case Outcome::NotApplicable: os << "N/A "; break;
    }
    os << "  d=" << line.d << "  " << line.property << "  " << line.detail;
    return os.str();
}

}  // namespace latwidth::cli
