#pragma once

// The Laves [3.4.6.4] kite grid: hexagons of side 2 split into six kites with
// side lengths 1 and sqrt(3). Hats cover 8 kites, turtles 10; all placements
// are grid isometries (rotations by 60 degrees about the origin hexagon centre
// plus hexagon-lattice translations, optionally a reflection).

#include <cstdint>
#include <vector>

#include "spectre/polygon.hpp"
#include "spectre/tiles.hpp"

namespace spectre {

struct Axial {
    int q = 0, r = 0;
    friend bool operator==(Axial a, Axial b) { return a.q == b.q && a.r == b.r; }
    friend bool operator<(Axial a, Axial b) { return a.q != b.q ? a.q < b.q : a.r < b.r; }
    friend Axial operator+(Axial a, Axial b) { return {a.q + b.q, a.r + b.r}; }
    friend Axial operator-(Axial a, Axial b) { return {a.q - b.q, a.r - b.r}; }
    Axial rot60(int t) const {
        int qq = q, rr = r;
        t = ((t % 6) + 6) % 6;
        for (int i = 0; i < t; i++) { int nq = -rr; rr = qq + rr; qq = nq; }
        return {qq, rr};
    }
    Axial reflect_x() const { return {q, -q - r}; }
    int dist() const { return std::max({std::abs(q), std::abs(r), std::abs(q + r)}); }
};

// kite k of hexagon (q,r): quadrilateral (centre, midpoint k-1, vertex k, midpoint k)
// with the hexagon vertex at angle 60k and midpoints at 60k+30.
struct KiteCell {
    std::int16_t q = 0, r = 0, k = 0;
    friend bool operator==(KiteCell a, KiteCell b) { return a.q == b.q && a.r == b.r && a.k == b.k; }
    friend bool operator<(KiteCell a, KiteCell b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.r != b.r) return a.r < b.r;
        return a.k < b.k;
    }
};

using CellKey = std::int64_t;  // packed KiteCell, order-preserving
inline CellKey cell_key(KiteCell c) {
    return (CellKey(std::uint16_t(c.q)) << 32) | (CellKey(std::uint16_t(c.r)) << 16) |
           CellKey(std::uint16_t(c.k));
}
KiteCell cell_of_key(CellKey k);

Coord4 hex_center(Axial h);
Coord4 hex_vertex(Axial h, int k);
Coord4 hex_midpoint(Axial h, int k);
Polygon kite_polygon(KiteCell c);

KiteCell cell_transform(KiteCell c, int rot6, Axial t, bool reflect = false);

// the four edge-neighbours of a kite
std::array<KiteCell, 4> cell_neighbors(KiteCell c);

// the Coord4 corners of a kite (centre, midpoint, vertex, midpoint)
std::array<Coord4, 4> cell_corners(KiteCell c);

// grid pose: rotation by 60*rot6 about the origin hexagon centre, then
// translation by the hexagon lattice (reflection across x first if set)
struct GridPose {
    int rot6 = 0;
    Axial t{};
    bool reflect = false;

    friend bool operator==(const GridPose& a, const GridPose& b) {
        return a.rot6 == b.rot6 && a.t == b.t && a.reflect == b.reflect;
    }
    friend bool operator<(const GridPose& a, const GridPose& b);
    // composition acting on cells: (a*b)(c) == a(b(c))
    friend GridPose compose(const GridPose& a, const GridPose& b);
    GridPose inverse() const;
    KiteCell operator()(KiteCell c) const { return cell_transform(c, rot6, t, reflect); }
    Axial operator()(Axial h) const {
        Axial x = reflect ? h.reflect_x() : h;
        return x.rot60(rot6) + t;
    }
    // the same pose as a plane isometry (rotation by 2*rot6 thirty-degree steps)
    Isometry isometry() const;
};

// base polykite shapes, verified against the Tile(a,b) polygons at startup:
// cells are exact coverage of the grid-aligned hat / turtle polygon
const std::vector<KiteCell>& hat_cells();     // 8 cells
const std::vector<KiteCell>& turtle_cells();  // 10 cells

// grid-aligned word polygons (hat anchored at its midpoint vertex; turtle rotated 30deg)
const Polygon& hat_grid_polygon();
const Polygon& turtle_grid_polygon();
Isometry hat_grid_anchor();     // isometry mapping the word-frame hat onto the grid hat
Isometry turtle_grid_anchor();  // likewise for the turtle (rotation by 30 included)

// exact coverage: the kites whose closed union equals the polygon; throws if the
// polygon is not an exact union of kites
std::vector<KiteCell> covered_cells(const Polygon& poly);

// a placed hat/turtle on the grid; pose applies to the base cells
struct GridTile {
    TileKind kind = TileKind::Hat;
    GridPose pose;
    friend bool operator==(const GridTile& a, const GridTile& b) {
        return a.kind == b.kind && a.pose == b.pose;
    }
    friend bool operator<(const GridTile& a, const GridTile& b);
    std::vector<KiteCell> cells() const;
    // the tile as a word-frame placed tile (Z12 pose), for exact polygon geometry
    PlacedTile placed() const;
};

}  // namespace spectre
