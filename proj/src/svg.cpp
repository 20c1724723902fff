#include "spectre/svg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace spectre {

RenderStyle RenderStyle::defaults() {
    RenderStyle s;
    s.fill["tile11"] = "#dfe8f0";
    s.fill["hat"] = "#9ecae1";
    s.fill["turtle"] = "#fdd49e";
    s.fill["even"] = "#dfe8f0";
    s.fill["odd"] = "#74a9cf";
    s.fill["mystic"] = "#41ab5d";
    return s;
}

namespace {

void emit_point(std::ostringstream& os, double x, double y, bool first) {
    os << (first ? "M" : "L") << x << " " << -y << " ";
}

}  // namespace

std::string render_svg(const Patch& patch, const RenderStyle& style,
                       const std::vector<int>* mystic_flags) {
    double minx = std::numeric_limits<double>::max(), maxx = -minx;
    double miny = minx, maxy = -minx;
    std::optional<SpectreBoundary> curved;
    if (style.curve) curved = apply_edge_curve(*style.curve, style.scheme);
    std::ostringstream body;
    for (size_t ti = 0; ti < patch.tiles.size(); ti++) {
        const auto& t = patch.tiles[ti];
        Polygon poly = t.polygon();
        std::ostringstream d;
        if (curved && t.kind == TileKind::Tile11) {
            // one polyline piece per skeleton edge, curve fitted in the tile's frame
            const SpectreBoundary& b = *curved;
            bool first = true;
            for (const auto& piece : b.pieces) {
                for (size_t i = 0; i + 1 < piece.size(); i++) {
                    Point2E p = piece[i];
                    // transform by pose: rotate then translate (reflect handled)
                    Point2E q = p;
                    if (t.pose.reflect) q = reflect_x_point(q);
                    q = rot30_point(q, t.pose.rot);
                    double x = (q.x.to_double() + t.pose.trans.fx()) * style.scale;
                    double y = (q.y.to_double() + t.pose.trans.fy()) * style.scale;
                    emit_point(d, x, y, first);
                    first = false;
                    minx = std::min(minx, x); maxx = std::max(maxx, x);
                    miny = std::min(miny, -y); maxy = std::max(maxy, -y);
                }
            }
        } else {
            for (size_t i = 0; i < poly.size(); i++) {
                double x = poly[i].fx() * style.scale, y = poly[i].fy() * style.scale;
                emit_point(d, x, y, i == 0);
                minx = std::min(minx, x); maxx = std::max(maxx, x);
                miny = std::min(miny, -y); maxy = std::max(maxy, -y);
            }
        }
        d << "Z";
        std::string fill = "#cccccc";
        std::string key = to_string(t.kind);
        if (style.color_by_parity && t.kind == TileKind::Tile11)
            key = classify_parity(t) == Parity::Even ? "even" : "odd";
        if (style.mystic_shading && mystic_flags && (*mystic_flags)[ti]) key = "mystic";
        auto it = style.fill.find(key);
        if (it != style.fill.end()) fill = it->second;
        body << "  <path d=\"" << d.str() << "\" fill=\"" << fill
             << "\" stroke=\"#333\" stroke-width=\"" << style.stroke_width * style.scale
             << "\"/>\n";
    }
    std::ostringstream out;
    double pad = style.scale;
    if (patch.tiles.empty()) { minx = miny = 0; maxx = maxy = 1; }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx - pad << " "
        << miny - pad << " " << (maxx - minx + 2 * pad) << " " << (maxy - miny + 2 * pad)
        << "\">\n";
    out << body.str();
    out << "</svg>\n";
    return out.str();
}

}  // namespace spectre
