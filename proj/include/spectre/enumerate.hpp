#pragma once

// Corona enumeration and reduction over polykite tile sets on the Laves grid:
// legal pairs, reduced k-patch lists, the T6H/T7H/T8H forcing chain, and the
// classification of the nine marked clusters.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spectre/kitegrid.hpp"
#include "spectre/marks.hpp"

namespace spectre {

// sorted cell-key set; keys are translation-shiftable (biased field packing)
using CellSet = std::vector<CellKey>;

CellKey axial_shift_key(Axial t);  // additive shift corresponding to a translation
CellSet to_cellset(const std::vector<KiteCell>& cells);
bool cellsets_disjoint(const CellSet& a, const CellSet& b);
bool cellsets_intersect_shifted(const CellSet& a, const CellSet& b, CellKey shift_b);

// a finite tile set over the kite grid
class TileSet {
  public:
    struct Shape {
        std::string name;
        std::vector<KiteCell> cells;
    };

    explicit TileSet(std::vector<Shape> shapes);

    int count() const { return int(shapes_.size()); }
    const std::string& name(int s) const { return shapes_[s].name; }
    int index(const std::string& name) const;
    const std::vector<KiteCell>& base_cells(int s) const { return shapes_[s].cells; }

    // rotated base data (pose translation applied as a key shift)
    const CellSet& rot_cells(int s, int rot6) const { return rot_cells_[s][rot6]; }
    const CellSet& rot_halo_edge(int s, int rot6) const { return rot_halo_edge_[s][rot6]; }
    const CellSet& rot_halo_vertex(int s, int rot6) const { return rot_halo_vertex_[s][rot6]; }

  private:
    std::vector<Shape> shapes_;
    std::vector<std::array<CellSet, 6>> rot_cells_, rot_halo_edge_, rot_halo_vertex_;
};

struct Placement {
    int shape = 0;
    int rot6 = 0;
    Axial t{};

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.shape == b.shape && a.rot6 == b.rot6 && a.t == b.t;
    }
    friend bool operator<(const Placement& a, const Placement& b) {
        if (a.shape != b.shape) return a.shape < b.shape;
        if (a.rot6 != b.rot6) return a.rot6 < b.rot6;
        return a.t < b.t;
    }
    GridPose pose() const { return GridPose{rot6, t, false}; }
};

// legal neighbour placements per center shape (center at identity pose)
struct PairTable {
    std::vector<std::vector<Placement>> rel;  // indexed by center shape; sorted

    bool legal_rel(int center_shape, const Placement& p) const;
    // both placements arbitrary; true iff their relative placement is legal
    bool legal(const Placement& a, const Placement& b) const;
    std::vector<size_t> counts() const;
};

// all cell-disjoint edge-sharing placements, chiral (no reflections), filtered by
// a bounded extendability probe (every union boundary edge must be coverable)
PairTable legal_pairs(const TileSet& ts, bool probe = true);

struct KPatch {
    int center_shape = 0;            // center at identity pose
    std::vector<Placement> tiles;    // coronas, ring order then placement order
    std::vector<std::uint8_t> ring;  // ring index per tile (1-based)

    friend bool operator==(const KPatch& a, const KPatch& b) {
        return a.center_shape == b.center_shape && a.tiles == b.tiles;
    }
    friend bool operator<(const KPatch& a, const KPatch& b);
};

struct KPatchList {
    int k = 1;
    bool reduced = false;
    std::vector<KPatch> patches;

    std::vector<size_t> counts_by_center(const TileSet& ts) const;
    std::uint64_t content_hash() const;
    void sort_canonical();
};

// every way of surrounding each center shape with a hole-free corona in which
// all edge-sharing pairs are legal
KPatchList enumerate_1patches(const TileSet& ts, const PairTable& pairs);

// extendability fixed point: drop patches until every corona tile of every patch
// can be compatibly overlaid with some patch in the list
KPatchList reduce(const TileSet& ts, const KPatchList& list);

// k-patches from reduced (k-1)-patches (then reduce the result)
KPatchList extend_k(const TileSet& ts, const KPatchList& km1);

// ---- the forcing chain of section-4 style analysis ----

struct ForcingChain {
    KPatchList reduced_hat_turtle;            // over {hat, turtle}
    std::vector<GridTile> t6h, t7h, t8h;      // cluster tiles, canonical frames
    Placement forced_hat_in_t7h;              // relative to the T6H frame
    Placement forced_t7h_in_t8h;              // relative to the hat frame
    KPatchList reduced_hat_t6h, reduced_hat_t7h;
};

ForcingChain run_forcing_chain();

// ---- nine-cluster classification and the marked-hexagon bridge ----

struct ClusterEntry {
    HexKind kind;
    bool is_t8h;                              // Gamma is the T7H cluster
    std::array<Coord4, 6> vertices;           // hex-edge-indexed: vertex e starts edge e
    std::array<std::vector<Coord4>, 6> segs;  // boundary path of hex edge e (CCW)
    std::array<EdgeLabel, 6> labels;          // equals hexagon_table (bridge-checked)
};

struct ClusterClassification {
    std::array<ClusterEntry, 9> entries;      // indexed by HexKind
    std::vector<GridTile> t7h_tiles, t8h_tiles;
    KPatchList reduced_clusters;              // over {T7H, T8H}
};

// classify reduced {T7H,T8H} 1-patches into exactly nine marked kinds and bridge
// the letters to the frozen hexagon table; throws if the bridge is not unique
ClusterClassification classify_nine(const ForcingChain& fc);

// unique decomposition of a hat/turtle patch into T7H/T8H clusters.
// interior tiles are fully assigned; boundary tiles may remain unassigned.
struct ClusterDecomposition {
    struct Cluster {
        bool is_t8h;
        GridPose pose;                  // cluster frame pose
        std::vector<int> tile_indices;  // indices into the input patch
    };
    std::vector<Cluster> clusters;
    std::vector<int> unassigned;  // boundary leftovers
};

ClusterDecomposition compose_clusters(const std::vector<GridTile>& tiles);

}  // namespace spectre
