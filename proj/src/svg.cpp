#include "latwidth/svg.hpp"

#include <algorithm>
#include <sstream>

#include "latwidth/classify.hpp"
#include "latwidth/width.hpp"

namespace latwidth {

namespace {

struct Frame {
    Coord xmin, xmax, ymin, ymax;
    int pitch;

    long px(Coord x) const { return static_cast<long>((x - xmin + 1) * pitch); }
    long py(Coord y) const { return static_cast<long>((ymax - y + 1) * pitch); }
    long width() const { return static_cast<long>((xmax - xmin + 2) * pitch); }
    long height() const { return static_cast<long>((ymax - ymin + 2) * pitch); }
};

std::string point_list(const Frame& f, std::span<const Point> pts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << f.px(pts[i].x) << ',' << f.py(pts[i].y);
    return os.str();
}

}  // namespace

std::string render_svg(const Polygon& p, std::optional<Coord> hexagon_ell, const SvgStyle& style) {
    const Coord d = lattice_width(p).width;
    std::optional<Polygon> hex;
    if (hexagon_ell) hex = hexagon(d, *hexagon_ell);

    Frame f{0, d, 0, d, style.pitch};
    for (const Point& v : p.vertices()) {
        f.xmin = std::min(f.xmin, v.x);
        f.xmax = std::max(f.xmax, v.x);
        f.ymin = std::min(f.ymin, v.y);
        f.ymax = std::max(f.ymax, v.y);
    }
    if (f.xmax - f.xmin > kMaxPlotExtent || f.ymax - f.ymin > kMaxPlotExtent) {
        throw OutOfRange("polygon too large to plot");
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\"" << f.height()
       << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height() << "\">\n";
    os << "<rect class=\"background\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (style.show_grid) {
        for (Coord x = f.xmin; x <= f.xmax; ++x) {
            for (Coord y = f.ymin; y <= f.ymax; ++y) {
                os << "<circle class=\"grid\" cx=\"" << f.px(x) << "\" cy=\"" << f.py(y)
                   << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
            }
        }
    }
    os << "<rect class=\"square\" x=\"" << f.px(0) << "\" y=\"" << f.py(d) << "\" width=\"" << d * style.pitch
       << "\" height=\"" << d * style.pitch << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    if (hex) {
        os << "<polygon class=\"hexagon\" points=\"" << point_list(f, hex->vertices())
           << "\" fill=\"none\" stroke=\"#cc5500\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
    }
    os << "<polygon class=\"polygon\" points=\"" << point_list(f, p.vertices()) << "\" fill=\"" << style.fill
       << "\" fill-opacity=\"" << style.fill_opacity << "\" stroke=\"" << style.stroke
       << "\" stroke-width=\"2\"/>\n";
    for (const Point& q : lattice_points(p)) {
        os << "<circle class=\"lp\" cx=\"" << f.px(q.x) << "\" cy=\"" << f.py(q.y) << "\" r=\"4\" fill=\""
           << style.stroke << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace latwidth
