#pragma once

// Exact polygon predicates over Coord4 vertices. Orientation, simplicity,
// interior disjointness and congruence all reduce to integer sign tests.

#include <optional>
#include <vector>

#include "spectre/exact.hpp"

namespace spectre {

// cross product of embedded vectors, as (p + q*sqrt3)/4; only the sign matters
// for predicates, and the exact value feeds the shoelace area.
struct Cross {
    i64 p, q;  // value (p + q*sqrt3)/4
    int sign() const { return Surd::sign_pq(p, q); }
};

Cross cross(const Coord4& a, const Coord4& b);
int orient(const Coord4& a, const Coord4& b, const Coord4& c);  // sign of (b-a)x(c-a)

enum class SegSeg { Disjoint, Touch, Cross, Overlap };
SegSeg segment_intersect(const Coord4& a, const Coord4& b, const Coord4& c, const Coord4& d);

// v strictly inside segment ab (collinear, between endpoints, not an endpoint)
bool point_in_open_segment(const Coord4& v, const Coord4& a, const Coord4& b);

struct Polygon {
    std::vector<Coord4> verts;  // counterclockwise

    Polygon() = default;
    explicit Polygon(std::vector<Coord4> v) : verts(std::move(v)) {}

    size_t size() const { return verts.size(); }
    const Coord4& operator[](size_t i) const { return verts[i]; }

    Surd area() const;                 // signed shoelace; positive for CCW
    bool closed_nonempty() const { return verts.size() >= 3; }
    bool simple() const;               // exact; adjacent edges may share only a vertex
    bool contains_strict(const Coord4& pt) const;  // strictly interior (exact winding)
    bool on_boundary(const Coord4& pt) const;

    Polygon transformed(const Isometry& g) const;
    Polygon reversed() const;

    // deterministic canonical form: lexicographically minimal rotation of the
    // vertex sequence (tuples are unique per point, so this is exact)
    Polygon canonical() const;

    // fan/ear triangulation with exact predicates; triangles are CCW
    std::vector<std::array<Coord4, 3>> triangulate() const;
};

// true iff interiors do not intersect (boundary contact allowed); exact
bool polygons_interior_disjoint(const Polygon& p, const Polygon& q);

// isometry g with g(p) == q as vertex cycles, if one exists
std::optional<Isometry> congruence(const Polygon& p, const Polygon& q, bool allow_reflection);

}  // namespace spectre
