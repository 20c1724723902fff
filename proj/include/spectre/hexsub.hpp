#pragma once

// The marked-hexagon substitution system: hexagon-level k-patch lists, the
// supertile composition rules, substitution to arbitrary depth, geometric
// realization as hat/turtle clusters, and non-periodicity checks.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spectre/enumerate.hpp"
#include "spectre/marks.hpp"

namespace spectre {

// honeycomb directions (axial steps), CCW; rotation by one step maps d to d+1
inline constexpr std::array<Axial, 6> kHexDirs = {
    Axial{1, 0}, Axial{0, 1}, Axial{-1, 1}, Axial{-1, 0}, Axial{0, -1}, Axial{1, -1}};

// cells of the radius-k honeycomb ball in fixed BFS order (center first)
struct HexBall {
    int k;
    std::vector<Axial> cells;
    std::map<Axial, int> index;
    std::vector<std::array<int, 6>> nbr;  // nbr[i][d]: cell index or -1

    static const HexBall& of(int k);
};

// hexagon config: kind*6 + rot; 0xFF = unset
using HexCfg = std::uint8_t;
inline constexpr HexCfg kUnsetCfg = 0xFF;
inline HexCfg make_cfg(HexKind kind, int rot) { return HexCfg(int(kind) * 6 + rot); }
inline HexKind cfg_kind(HexCfg c) { return HexKind(c / 6); }
inline int cfg_rot(HexCfg c) { return c % 6; }

struct HexPatch {
    int k = 1;
    std::vector<HexCfg> cfg;  // over HexBall::of(k).cells

    HexCfg center() const { return cfg[0]; }
    friend bool operator==(const HexPatch& a, const HexPatch& b) { return a.cfg == b.cfg; }
    friend bool operator<(const HexPatch& a, const HexPatch& b) { return a.cfg < b.cfg; }
};

struct HexPatchList {
    int k = 1;
    bool reduced = false;
    std::vector<HexPatch> patches;

    std::array<size_t, 9> counts_by_center() const;
    std::uint64_t content_hash() const;
};

// all label-matching 1-patches (center rotation fixed to 0)
HexPatchList hex_1patches();
HexPatchList hex_reduce(const HexPatchList& list);
HexPatchList hex_extend(const HexPatchList& km1);  // k-1 -> k, reduced output

// reduced lists up to k (cached chain 1..k)
const HexPatchList& hex_reduced(int k);

// ---- supertile rules (frozen; derived from reduced 5-patches) ----

struct SupertileLayout {
    HexKind kind;  // the supertile's own kind (combinatorially a reflected hexagon)
    struct Child {
        HexKind kind;
        int rot;
        Axial at;
    };
    std::vector<Child> children;  // Gamma first, at (0,0) rot 0; 7 or 8 children
    // boundary, indexed by parent edge 0..5: CCW runs of (child index, honeycomb dir)
    std::array<std::vector<std::pair<int, int>>, 6> superedges;
};

const std::array<Axial, 7>& supertile_footprint();  // R, Gamma cell first
Axial supertile_extra_cell();                       // X
const std::array<SupertileLayout, 9>& supertile_table();

// derivation of the above from reduced 5-patches (used by the proof suite and
// the table generator); throws if the footprint or contents are not unique
struct SupertileDerivation {
    std::array<Axial, 7> footprint;
    Axial extra;
    std::array<SupertileLayout, 9> layouts;
};
SupertileDerivation derive_supertiles(const HexPatchList& red5);

// ---- combinatorial patches ----

struct CombPatch {
    struct Node {
        HexKind kind;
    };
    std::vector<Node> nodes;
    // adj[n][e] = (node, edge) paired with node n's edge e, or (-1,-1)
    std::vector<std::array<std::pair<int, int>, 6>> adj;
    bool mirrored = false;

    int size() const { return int(nodes.size()); }
    // label of node n's edge e under the patch's chirality convention
    EdgeLabel label(int n, int e) const;
    bool valid() const;  // every pairing satisfies matches()
};

// honeycomb embedding of a comb patch (exists for tiling-universe patches)
struct HexEmbedding {
    std::vector<Axial> cell;
    std::vector<int> rot;
    bool mirrored = false;
};
HexEmbedding embed(const CombPatch& p);  // throws on inconsistency

// single-hexagon seed
CombPatch seed_patch(HexKind kind);
// embedded ball patch -> comb patch
CombPatch comb_from_hexpatch(const HexPatch& p);

// replace each hexagon by its supertile; flips chirality
CombPatch substitute(const CombPatch& p);

// unique supertile composition; flips chirality back. interior nodes only:
// node_of[i] = parent node of input node i, or -1 for boundary leftovers
struct Composition {
    CombPatch parent;
    std::vector<int> node_of;
};
Composition compose(const CombPatch& p);

// ---- geometric realization ----

struct RealizedPatch {
    std::vector<GridTile> tiles;               // hats/turtles (reflected if mirrored)
    std::vector<int> cluster_of;               // per tile: node index in the comb patch
    std::vector<GridPose> cluster_pose;        // per node: cluster frame pose
    bool mirrored = false;
    Patch as_patch() const;                    // exact word-frame placed tiles
};

// each hexagon becomes its marked cluster (Gamma: T7H, others: T8H), verified
// interior-disjoint; throws on geometric conflict
RealizedPatch realize_geometry(const CombPatch& p);

// ---- non-periodicity ----

// a placed record on an integer lattice (hexagon or kite-grid patches alike)
struct LatticeRec {
    int type = 0;  // shape/kind + rotation baked in by the caller
    Axial pos{};
    friend bool operator<(const LatticeRec& a, const LatticeRec& b) {
        return a.type != b.type ? a.type < b.type : a.pos < b.pos;
    }
    friend bool operator==(const LatticeRec& a, const LatticeRec& b) {
        return a.type == b.type && a.pos == b.pos;
    }
};

// true iff no nonzero lattice translation with |shift| <= max_shift maps the
// record set onto itself wherever both sides are defined, with at least one
// record actually mapped
bool check_nonperiodic(const std::vector<LatticeRec>& recs, double max_shift);

// cell-accurate version for kite-grid tiles: a shifted tile is "inside" when all
// its kites stay within the covered region
bool check_nonperiodic(const std::vector<GridTile>& tiles, double max_shift);

std::vector<LatticeRec> records_of(const std::vector<GridTile>& tiles);
std::vector<LatticeRec> records_of(const CombPatch& p);  // embeds first

}  // namespace spectre
