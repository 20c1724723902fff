#include "spectre/kitegrid.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectre {

namespace {
const Coord4 kA1 = 2 * unit(0) + 2 * unit(2);    // (3, sqrt3): axial q step
const Coord4 kA2 = -2 * unit(0) + 4 * unit(2);   // (0, 2sqrt3): axial r step
}  // namespace

KiteCell cell_of_key(CellKey k) {
    return KiteCell{std::int16_t(std::uint16_t(k >> 32)), std::int16_t(std::uint16_t(k >> 16)),
                    std::int16_t(std::uint16_t(k))};
}

Coord4 hex_center(Axial h) { return h.q * kA1 + h.r * kA2; }
Coord4 hex_vertex(Axial h, int k) { return hex_center(h) + 2 * unit(((k % 6) + 6) % 6 * 2); }
Coord4 hex_midpoint(Axial h, int k) { return hex_center(h) + sqrt3_unit(((k % 6) + 6) % 6 * 2 + 1); }

Polygon kite_polygon(KiteCell c) {
    Axial h{c.q, c.r};
    return Polygon({hex_center(h), hex_midpoint(h, c.k - 1 < 0 ? c.k + 5 : c.k - 1),
                    hex_vertex(h, c.k), hex_midpoint(h, c.k)});
}

std::array<Coord4, 4> cell_corners(KiteCell c) {
    Polygon p = kite_polygon(c);
    return {p[0], p[1], p[2], p[3]};
}

KiteCell cell_transform(KiteCell c, int rot6, Axial t, bool reflect) {
    int q = c.q, r = c.r, k = c.k;
    if (reflect) {
        Axial h = Axial{q, r}.reflect_x();
        q = h.q; r = h.r;
        k = (6 - k) % 6;
    }
    rot6 = ((rot6 % 6) + 6) % 6;
    Axial h = Axial{q, r}.rot60(rot6);
    k = (k + rot6) % 6;
    return KiteCell{std::int16_t(h.q + t.q), std::int16_t(h.r + t.r), std::int16_t(k)};
}

std::array<KiteCell, 4> cell_neighbors(KiteCell c) {
    // two same-hexagon neighbours across the centre-midpoint edges, and two in
    // adjacent hexagons across the vertex-midpoint edges. The cross-hex offsets
    // are rotation-covariant; derive the k=0 case once geometrically.
    static const auto base = [] {
        KiteCell c0{0, 0, 0};
        auto edges_of = [](KiteCell cc) {
            Polygon p = kite_polygon(cc);
            std::vector<std::pair<Coord4, Coord4>> es;
            for (int i = 0; i < 4; i++) {
                Coord4 a = p[i], b = p[(i + 1) % 4];
                es.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            }
            return es;
        };
        auto e0 = edges_of(c0);
        std::array<KiteCell, 2> cross{};
        int found = 0;
        for (int dq = -1; dq <= 1; dq++)
            for (int dr = -1; dr <= 1; dr++)
                for (int k = 0; k < 6; k++) {
                    if (dq == 0 && dr == 0) continue;
                    KiteCell cc{std::int16_t(dq), std::int16_t(dr), std::int16_t(k)};
                    auto e1 = edges_of(cc);
                    for (const auto& a : e0)
                        for (const auto& b : e1)
                            if (a == b) cross[found++ % 2] = cc;
                }
        if (found != 2) throw std::logic_error("kite neighbour derivation failed");
        return cross;
    }();
    std::array<KiteCell, 4> out;
    out[0] = KiteCell{c.q, c.r, std::int16_t((c.k + 1) % 6)};
    out[1] = KiteCell{c.q, c.r, std::int16_t((c.k + 5) % 6)};
    for (int i = 0; i < 2; i++) {
        // rotate the k=0 cross-hex neighbour by c.k, then translate by (c.q, c.r)
        out[2 + i] = cell_transform(base[i], c.k, Axial{c.q, c.r});
    }
    return out;
}

bool operator<(const GridPose& a, const GridPose& b) {
    if (a.rot6 != b.rot6) return a.rot6 < b.rot6;
    if (!(a.t == b.t)) return a.t < b.t;
    return a.reflect < b.reflect;
}

GridPose compose(const GridPose& a, const GridPose& b) {
    GridPose g;
    g.reflect = a.reflect != b.reflect;
    g.rot6 = (((a.reflect ? -b.rot6 : b.rot6) + a.rot6) % 6 + 6) % 6;
    g.t = a(b.t);
    return g;
}

GridPose GridPose::inverse() const {
    GridPose g;
    g.reflect = reflect;
    if (reflect) {
        g.rot6 = rot6;
        g.t = Axial{0, 0} - t.reflect_x().rot60(rot6);
    } else {
        g.rot6 = (6 - rot6) % 6;
        g.t = Axial{0, 0} - t.rot60(-rot6);
    }
    return g;
}

Isometry GridPose::isometry() const {
    Isometry g;
    g.reflect = reflect;
    g.rot = 2 * rot6;
    g.trans = hex_center(t);
    return g;
}

namespace {

// exact point-in-polygon for 4x-scaled coordinates: the kite centroid times 4 is
// a Coord4, so test centroid*4 against polygon*4
bool centroid_inside(const Polygon& poly4, KiteCell c) {
    auto cs = cell_corners(c);
    Coord4 cen4 = cs[0] + cs[1] + cs[2] + cs[3];
    Polygon p4 = poly4;
    return p4.contains_strict(cen4);
}

}  // namespace

std::vector<KiteCell> covered_cells(const Polygon& poly) {
    // bounding window in axial coordinates from float bounds (prefilter only)
    double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
    for (const auto& v : poly.verts) {
        xmin = std::min(xmin, v.fx()); xmax = std::max(xmax, v.fx());
        ymin = std::min(ymin, v.fy()); ymax = std::max(ymax, v.fy());
    }
    Polygon poly4;
    for (const auto& v : poly.verts) poly4.verts.push_back(4 * v);
    std::vector<KiteCell> out;
    int span = int((std::max(xmax - xmin, ymax - ymin)) / 3.0) + 3;
    int cq = int((xmin + xmax) / 6.0), cr = int((ymin + ymax) / (2 * 1.7320508) - (xmin + xmax) / 12.0);
    for (int q = cq - span; q <= cq + span; q++)
        for (int r = cr - span; r <= cr + span; r++)
            for (int k = 0; k < 6; k++) {
                KiteCell c{std::int16_t(q), std::int16_t(r), std::int16_t(k)};
                if (centroid_inside(poly4, c)) out.push_back(c);
            }
    // verification: kite count times kite area (sqrt3) must equal the polygon area,
    // and every kite corner must lie inside or on the polygon
    Surd want = poly.area();
    Surd got = Surd(0, i64(out.size()), 1);
    if (!(want == got)) throw std::invalid_argument("polygon is not an exact union of kites (area)");
    for (const auto& c : out)
        for (const auto& v : cell_corners(c))
            if (!poly.contains_strict(v) && !poly.on_boundary(v))
                throw std::invalid_argument("polygon is not an exact union of kites (corner)");
    std::sort(out.begin(), out.end());
    return out;
}

Isometry hat_grid_anchor() {
    // the word anchor (180-degree vertex) sits at the midpoint (0, -sqrt3)
    Isometry g;
    g.trans = -(unit(2) + unit(4));
    return g;
}

Isometry turtle_grid_anchor() {
    // rotate the word turtle by 30 degrees, then translate its anchor to a grid
    // midpoint; the translation is derived once by alignment search
    static const Isometry g = [] {
        Polygon base = turtle_polygon();
        Isometry r = Isometry::rotation(1);
        Polygon rp = base.transformed(r);
        // candidate anchors: grid points near the origin
        for (int q = -2; q <= 2; q++)
            for (int rr = -2; rr <= 2; rr++) {
                std::vector<Coord4> cands{hex_center({q, rr})};
                for (int k = 0; k < 6; k++) {
                    cands.push_back(hex_vertex({q, rr}, k));
                    cands.push_back(hex_midpoint({q, rr}, k));
                }
                for (const auto& d : cands) {
                    Isometry g2 = r;
                    g2.trans = d;
                    Polygon moved = base.transformed(g2);
                    try {
                        auto cells = covered_cells(moved);
                        // canonical choice: all cells within distance 1 of the origin hexagon
                        bool near = true;
                        for (auto c : cells)
                            if (Axial{c.q, c.r}.dist() > 1) { near = false; break; }
                        if (near) return g2;
                    } catch (const std::invalid_argument&) {
                    }
                }
            }
        throw std::logic_error("turtle grid alignment not found");
    }();
    return g;
}

const Polygon& hat_grid_polygon() {
    static const Polygon p = hat_polygon().transformed(hat_grid_anchor());
    return p;
}
const Polygon& turtle_grid_polygon() {
    static const Polygon p = turtle_polygon().transformed(turtle_grid_anchor());
    return p;
}

const std::vector<KiteCell>& hat_cells() {
    static const std::vector<KiteCell> cs = covered_cells(hat_grid_polygon());
    return cs;
}
const std::vector<KiteCell>& turtle_cells() {
    static const std::vector<KiteCell> cs = covered_cells(turtle_grid_polygon());
    return cs;
}

bool operator<(const GridTile& a, const GridTile& b) {
    if (a.kind != b.kind) return int(a.kind) < int(b.kind);
    return a.pose < b.pose;
}

std::vector<KiteCell> GridTile::cells() const {
    const auto& base = kind == TileKind::Hat ? hat_cells() : turtle_cells();
    std::vector<KiteCell> out;
    out.reserve(base.size());
    for (auto c : base) out.push_back(pose(c));
    std::sort(out.begin(), out.end());
    return out;
}

PlacedTile GridTile::placed() const {
    PlacedTile t;
    t.kind = kind;
    Isometry anchor = kind == TileKind::Hat ? hat_grid_anchor() : turtle_grid_anchor();
    t.pose = compose(pose.isometry(), anchor);
    return t;
}

}  // namespace spectre
