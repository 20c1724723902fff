#pragma once

// The Tile(a,b) continuum: hat, turtle, Tile(1,1), and the even/odd edge
// resizing equivalence between them.

#include <optional>
#include <string>
#include <vector>

#include "spectre/polygon.hpp"

namespace spectre {

// The 14-entry edge word of Tile(a,b), counterclockwise from the 180-degree
// vertex. Directions are multiples of 30 degrees; token A edges take length a
// (even directions), token B edges length b (odd directions).
inline constexpr int kWordLen = 14;
inline constexpr int kWordDirs[kWordLen] = {0, 2, 11, 1, 4, 6, 3, 5, 8, 6, 9, 7, 10, 0};
inline constexpr bool kWordTokenA[kWordLen] = {true,  true,  false, false, true,  true,  false,
                                               false, true,  true,  false, false, true,  true};

enum class TileKind { Tile11, Hat, Turtle };
enum class Parity { Even, Odd };

std::string to_string(TileKind k);
std::string to_string(Parity p);

// Tile(a,b) with a,b nonnegative integer-coefficient surds p + q*sqrt3
// (exactly representable in Coord4). Zero-length edges are collapsed, but the
// 180-degree vertex between the two collinear edges is always retained.
struct TileAB {
    Surd a, b;
    Polygon poly;                 // simple, CCW, anchored at the 180-degree vertex
    std::vector<int> vert_edge;   // vert_edge[i]: word index of the edge leaving vertex i
};

// errors: both lengths zero, negative lengths, or fractional (den != 1)
TileAB build_tile_ab(const Surd& a, const Surd& b);

const Polygon& tile11_polygon();
const Polygon& hat_polygon();      // word frame (Tile(1,sqrt3))
const Polygon& turtle_polygon();   // word frame (Tile(sqrt3,1))

const Polygon& shape_polygon(TileKind k);  // word frame

struct PlacedTile {
    TileKind kind = TileKind::Tile11;
    Isometry pose;

    Polygon polygon() const { return shape_polygon(kind).transformed(pose); }
    friend bool operator==(const PlacedTile& s, const PlacedTile& t) {
        return s.kind == t.kind && s.pose == t.pose;
    }
    friend bool operator<(const PlacedTile& s, const PlacedTile& t);
};

// parity of the tile's collinear edge pair under its pose (the pair sits at
// direction 0 in the word frame); rotating by 30 degrees flips it
Parity classify_parity(const PlacedTile& t);

struct Patch {
    std::vector<PlacedTile> tiles;

    // exact pairwise interior-disjointness (bounding-box prefiltered)
    bool interior_disjoint() const;
    // no tile vertex strictly inside another tile's edge
    bool vertex_to_vertex() const;
    // lengths of maximal straight runs in the union of tile boundaries;
    // for Tile(1,1) patches every run must have length 1 or 2
    std::vector<Surd> straight_run_lengths() const;

    void sort_canonical();
};

// Change the length of every edge in the given grid-direction parity family to
// new_len, keeping adjacency. Vertices are recomputed by walking the adjacency
// graph from the first tile. Tiles change kind accordingly.
// Throws on disconnected patches or geometric inconsistency.
Patch resize_edges(const Patch& patch, Parity family, const Surd& new_len);

}  // namespace spectre
