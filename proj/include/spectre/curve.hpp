#pragma once

// Edge-curve substitution: turning Tile(1,1) into a Spectre, and the exhaustive
// mating check that reflected copies are blocked.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spectre/tiles.hpp"

namespace spectre {

// exact plane point with surd coordinates (curve samples live off the Coord4 lattice)
struct Point2E {
    Surd x, y;
    friend bool operator==(const Point2E& a, const Point2E& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2E& a, const Point2E& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend Point2E operator+(const Point2E& a, const Point2E& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2E operator-(const Point2E& a, const Point2E& b) { return {a.x - b.x, a.y - b.y}; }
};

int orient2e(const Point2E& a, const Point2E& b, const Point2E& c);
bool segments_cross_or_overlap(const Point2E& a, const Point2E& b, const Point2E& c,
                               const Point2E& d, bool endpoints_shared_ok);

// rotation by 30k degrees about the origin (exact: entries in {0, +-1/2, +-sqrt3/2, +-1})
Point2E rot30_point(const Point2E& p, int k);
Point2E reflect_x_point(const Point2E& p);

enum class CurveScheme { SCurve, Alternating };

// sampled open curve in the unit edge frame, from (0,0) to (1,0)
struct CurveSpec {
    std::vector<Point2E> samples;  // includes both endpoints
    static CurveSpec from_rationals(const std::vector<std::pair<std::pair<i64, i64>, std::pair<i64, i64>>>& pts);
    bool endpoints_ok() const;
    bool is_straight() const;        // all samples collinear with the baseline
    bool is_simple() const;          // open polyline, no self intersection
    bool is_s_curve() const;         // symmetric under 180-degree rotation about (1/2, 0)
    CurveSpec reversed_flipped() const;  // 180-degree rotation about the edge midpoint
};

// the shipped default curves
const CurveSpec& default_s_curve();
const CurveSpec& default_asymmetric_curve();

// closed Spectre boundary: 14 curved edges over the Tile(1,1) skeleton
struct SpectreBoundary {
    CurveScheme scheme;
    std::vector<std::vector<Point2E>> pieces;  // one polyline per skeleton edge, CCW
    std::vector<Point2E> outline() const;      // concatenated, deduplicated joints
};

// errors: non s-curve for SCurve scheme, straight curve, or self-intersecting result
SpectreBoundary apply_edge_curve(const CurveSpec& curve, CurveScheme scheme);

struct MatingReport {
    // entry [i][j]: mating of unreflected edge i against reflected edge j
    enum class Entry { BlockedAngleClass, BlockedShape, Coincide };
    std::array<std::array<Entry, 14>, 14> entries;
    bool all_blocked() const;
    int coincide_count() const;
};

// For every pairing of an unreflected edge piece against a reflected tile's edge
// piece in the admissible matings of Tile(1,1) edges, report whether the two
// curves coincide (a coincidence means reflected adjacency is NOT blocked).
MatingReport check_reflection_blocking(const CurveSpec& curve, CurveScheme scheme);

}  // namespace spectre
