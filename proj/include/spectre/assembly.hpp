#pragma once

// The drawing algorithm: four key points on the Spectre's boundary drive chained
// snapping of Spectres and Mystics into clusters, iterated to any depth with
// alternating handedness.

#include <array>
#include <cstdint>
#include <vector>

#include "spectre/tiles.hpp"

namespace spectre {

enum class UnitKind : std::uint8_t { Spectre, Mystic };

// chain data for one cluster rule (frozen; derived against the hexagon pipeline)
struct ClusterRule {
    // units in chain order; each placed relative to its predecessor by rotating
    // 30*drot degrees and translating key point kp_self onto the predecessor's
    // kp_prev. the second shared key point pair is verified after placement.
    struct Step {
        UnitKind kind;
        int drot;      // Z12 rotation relative to the previous unit
        int kp_prev;   // key point index on the previous unit
        int kp_self;   // key point index on this unit
    };
    std::vector<Step> steps;              // steps[0]: first unit (drot/kps unused)
    std::array<std::pair<int, int>, 4> exports;  // cluster key points: (unit, kp)
};

struct AssemblyTables {
    std::array<int, 4> base_keypoints;    // vertex indices of Tile(1,1)
    Isometry mystic_second;               // pose of the mystic's second (odd) spectre
    std::array<std::pair<int, int>, 4> mystic_keypoints;  // (spectre 0/1, vertex kp idx)
    ClusterRule spectre_cluster;          // 8 units: one mystic + seven spectres
    ClusterRule mystic_cluster;           // 7 units: one mystic + six spectres
};

const AssemblyTables& assembly_tables();

// four ordered boundary anchors
struct KeyPoints {
    std::array<Coord4, 4> pts;
};

KeyPoints initial_keypoints();  // the base Spectre's four marked vertices

// a fully expanded assembly: placed Tile(1,1) copies plus the unit's key points
struct AssembledUnit {
    UnitKind kind = UnitKind::Spectre;
    int level = 0;
    Patch patch;                   // expanded level-0 spectres
    KeyPoints keypoints;
    std::vector<int> mystic_of;    // per tile: 1 if an odd (mystic second) spectre
};

// one substitution step: assemble the cluster that replaces `kind`, built from
// level-(n-1) children of opposite handedness
AssembledUnit assemble_cluster(UnitKind kind, int child_level);

// full expansion to level n with handedness alternating by level
AssembledUnit iterate(int levels, UnitKind seed);

struct AssemblyStats {
    i64 spectres = 0;        // lone spectres
    i64 mystics = 0;         // two-spectre compounds
    i64 even_tiles = 0, odd_tiles = 0;
    Surd total_area;         // exact
    double even_odd_ratio() const;
};

AssemblyStats stats(const AssembledUnit& u);

// exact count vector (spectres, mystics) after n applications of [[7,6],[1,1]]
std::array<i64, 2> unit_counts(int level, UnitKind seed);

// the even:odd ratio sequence by level, from the exact count recurrence
std::vector<double> even_odd_ratio_sequence(int max_level, UnitKind seed);

}  // namespace spectre
