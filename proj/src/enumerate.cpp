#include "spectre/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace spectre {

namespace {

constexpr int kBias = 2048;  // axial coordinates stay well inside (-kBias, kBias)

CellKey pack(int q, int r, int k) {
    return (CellKey(q + kBias) << 26) | (CellKey(r + kBias) << 8) | CellKey(k);
}

}  // namespace

CellKey axial_shift_key(Axial t) { return (CellKey(t.q) << 26) | (CellKey(t.r) << 8); }

namespace {

CellKey key_of(KiteCell c) { return pack(c.q, c.r, c.k); }

KiteCell unpack(CellKey key) {
    int q = int(key >> 26) - kBias;
    int r = int((key >> 8) & 0x3FFFF) - kBias;
    int k = int(key & 0xFF);
    return KiteCell{std::int16_t(q), std::int16_t(r), std::int16_t(k)};
}

}  // namespace

CellSet to_cellset(const std::vector<KiteCell>& cells) {
    CellSet out;
    out.reserve(cells.size());
    for (auto c : cells) out.push_back(key_of(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool cellsets_disjoint(const CellSet& a, const CellSet& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) i++;
        else if (b[j] < a[i]) j++;
        else return false;
    }
    return true;
}

bool cellsets_intersect_shifted(const CellSet& a, const CellSet& b, CellKey shift_b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        CellKey bj = b[j] + shift_b;
        if (a[i] < bj) i++;
        else if (bj < a[i]) j++;
        else return true;
    }
    return false;
}

TileSet::TileSet(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {
    rot_cells_.resize(shapes_.size());
    rot_halo_edge_.resize(shapes_.size());
    rot_halo_vertex_.resize(shapes_.size());
    for (size_t s = 0; s < shapes_.size(); s++) {
        for (int rot = 0; rot < 6; rot++) {
            std::vector<KiteCell> cs;
            cs.reserve(shapes_[s].cells.size());
            for (auto c : shapes_[s].cells) cs.push_back(cell_transform(c, rot, Axial{0, 0}));
            rot_cells_[s][rot] = to_cellset(cs);
            // halo by edge adjacency
            std::set<CellKey> inset(rot_cells_[s][rot].begin(), rot_cells_[s][rot].end());
            std::set<CellKey> edge_halo;
            for (auto c : cs)
                for (auto n : cell_neighbors(c)) {
                    CellKey k = key_of(n);
                    if (!inset.count(k)) edge_halo.insert(k);
                }
            rot_halo_edge_[s][rot] = CellSet(edge_halo.begin(), edge_halo.end());
            // halo by vertex adjacency: cells sharing any corner with the shape
            std::unordered_map<std::uint64_t, int> corner_count;
            Coord4Hash h;
            auto corner_hash = [&](const Coord4& v) { return h(v); };
            std::unordered_set<std::uint64_t> corners;
            for (auto c : cs)
                for (const auto& v : cell_corners(c)) corners.insert(corner_hash(v));
            std::set<CellKey> vert_halo;
            // candidates: two edge-steps suffice... kites around a degree-6 corner can
            // be up to 5 steps apart, so expand from the edge halo twice more
            std::set<CellKey> frontier = edge_halo, seen = edge_halo;
            for (int it = 0; it < 4; it++) {
                std::set<CellKey> next;
                for (auto k : frontier)
                    for (auto n : cell_neighbors(unpack(k))) {
                        CellKey nk = key_of(n);
                        if (!inset.count(nk) && !seen.count(nk)) { next.insert(nk); seen.insert(nk); }
                    }
                frontier = next;
            }
            for (auto k : seen) {
                for (const auto& v : cell_corners(unpack(k)))
                    if (corners.count(corner_hash(v))) { vert_halo.insert(k); break; }
            }
            rot_halo_vertex_[s][rot] = CellSet(vert_halo.begin(), vert_halo.end());
        }
    }
}

int TileSet::index(const std::string& name) const {
    for (int s = 0; s < count(); s++)
        if (shapes_[s].name == name) return s;
    throw std::invalid_argument("unknown shape: " + name);
}

namespace {

CellSet placement_cells(const TileSet& ts, const Placement& p) {
    CellSet out = ts.rot_cells(p.shape, p.rot6);
    CellKey sh = axial_shift_key(p.t);
    for (auto& k : out) k += sh;
    return out;
}

bool placements_disjoint(const TileSet& ts, const Placement& a, const Placement& b) {
    Axial d{b.t.q - a.t.q, b.t.r - a.t.r};
    return !cellsets_intersect_shifted(ts.rot_cells(a.shape, a.rot6),
                                       ts.rot_cells(b.shape, b.rot6), axial_shift_key(d));
}

bool placements_edge_share(const TileSet& ts, const Placement& a, const Placement& b) {
    Axial d{b.t.q - a.t.q, b.t.r - a.t.r};
    return cellsets_intersect_shifted(ts.rot_halo_edge(a.shape, a.rot6),
                                      ts.rot_cells(b.shape, b.rot6), axial_shift_key(d));
}

bool placements_vertex_share(const TileSet& ts, const Placement& a, const Placement& b) {
    Axial d{b.t.q - a.t.q, b.t.r - a.t.r};
    return cellsets_intersect_shifted(ts.rot_halo_vertex(a.shape, a.rot6),
                                      ts.rot_cells(b.shape, b.rot6), axial_shift_key(d));
}

// relative placement of b in a's frame
Placement relative_to(const Placement& a, const Placement& b) {
    GridPose g = compose(a.pose().inverse(), b.pose());
    return Placement{b.shape, g.rot6, g.t};
}

Placement transform(const GridPose& g, const Placement& p) {
    GridPose q = compose(g, p.pose());
    return Placement{p.shape, q.rot6, q.t};
}

// all placements containing the given cell (memoized per tile set instance)
struct ContainingCache {
    const TileSet* ts = nullptr;
    std::unordered_map<CellKey, std::vector<Placement>> map;
    const std::vector<Placement>& get(const TileSet& tset, CellKey cell) {
        if (ts != &tset) { ts = &tset; map.clear(); }
        auto it = map.find(cell);
        if (it != map.end()) return it->second;
        std::vector<Placement> out;
        KiteCell target = unpack(cell);
        for (int s = 0; s < tset.count(); s++) {
            for (int rot = 0; rot < 6; rot++) {
                for (CellKey base : tset.rot_cells(s, rot)) {
                    KiteCell b = unpack(base);
                    if (b.k != target.k) continue;
                    Axial t{target.q - b.q, target.r - b.r};
                    out.push_back(Placement{s, rot, t});
                }
            }
        }
        return map.emplace(cell, std::move(out)).first->second;
    }
};

ContainingCache& containing_cache() {
    static thread_local ContainingCache c;
    return c;
}

const std::vector<Placement>& placements_containing(const TileSet& ts, CellKey cell) {
    return containing_cache().get(ts, cell);
}

int axial_span(const TileSet& ts) {
    int m = 0;
    for (int s = 0; s < ts.count(); s++)
        for (auto c : ts.base_cells(s)) m = std::max(m, Axial{c.q, c.r}.dist());
    return m;
}

}  // namespace

bool PairTable::legal_rel(int center_shape, const Placement& p) const {
    const auto& v = rel[center_shape];
    return std::binary_search(v.begin(), v.end(), p);
}

bool PairTable::legal(const Placement& a, const Placement& b) const {
    return legal_rel(a.shape, relative_to(a, b));
}

std::vector<size_t> PairTable::counts() const {
    std::vector<size_t> c;
    for (const auto& v : rel) c.push_back(v.size());
    return c;
}

PairTable legal_pairs(const TileSet& ts, bool probe) {
    PairTable pt;
    pt.rel.resize(ts.count());
    int span = 2 * axial_span(ts) + 3;
    for (int cs = 0; cs < ts.count(); cs++) {
        Placement center{cs, 0, Axial{0, 0}};
        CellSet ccells = placement_cells(ts, center);
        for (int s = 0; s < ts.count(); s++) {
            for (int rot = 0; rot < 6; rot++) {
                for (int q = -span; q <= span; q++) {
                    for (int r = -span; r <= span; r++) {
                        Placement p{s, rot, Axial{q, r}};
                        if (!placements_disjoint(ts, center, p)) continue;
                        if (!placements_edge_share(ts, center, p)) continue;
                        pt.rel[cs].push_back(p);
                    }
                }
            }
        }
    }
    if (probe) {
        for (int cs = 0; cs < ts.count(); cs++) {
            Placement center{cs, 0, Axial{0, 0}};
            CellSet ccells = placement_cells(ts, center);
            std::vector<Placement> kept;
            for (const auto& p : pt.rel[cs]) {
                CellSet u = ccells;
                for (auto k : placement_cells(ts, p)) u.push_back(k);
                std::sort(u.begin(), u.end());
                std::unordered_set<CellKey> uset(u.begin(), u.end());
                bool ok = true;
                for (auto k : u) {
                    for (auto n : cell_neighbors(unpack(k))) {
                        CellKey nk = key_of(n);
                        if (uset.count(nk)) continue;
                        bool coverable = false;
                        for (const auto& q : placements_containing(ts, nk)) {
                            if (cellsets_disjoint(u, placement_cells(ts, q))) {
                                coverable = true;
                                break;
                            }
                        }
                        if (!coverable) { ok = false; break; }
                    }
                    if (!ok) break;
                }
                if (ok) kept.push_back(p);
            }
            pt.rel[cs] = std::move(kept);
        }
    }
    for (auto& v : pt.rel) std::sort(v.begin(), v.end());
    return pt;
}

bool operator<(const KPatch& a, const KPatch& b) {
    if (a.center_shape != b.center_shape) return a.center_shape < b.center_shape;
    return a.tiles < b.tiles;
}

std::vector<size_t> KPatchList::counts_by_center(const TileSet& ts) const {
    std::vector<size_t> c(ts.count(), 0);
    for (const auto& p : patches) c[p.center_shape]++;
    return c;
}

std::uint64_t KPatchList::content_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) { h ^= x; h *= 1099511628211ull; };
    mix(std::uint64_t(k));
    for (const auto& p : patches) {
        mix(std::uint64_t(p.center_shape) + 0x9e37);
        for (size_t i = 0; i < p.tiles.size(); i++) {
            const auto& t = p.tiles[i];
            mix(std::uint64_t(t.shape) << 40 ^ std::uint64_t(t.rot6) << 36 ^
                std::uint64_t(std::uint32_t(t.t.q)) << 18 ^ std::uint64_t(std::uint32_t(t.t.r)));
            mix(p.ring.empty() ? 1 : p.ring[i]);
        }
    }
    return h;
}

void KPatchList::sort_canonical() {
    for (auto& p : patches) {
        // keep ring blocks ordered, placements sorted within a ring
        std::vector<std::pair<std::uint8_t, Placement>> z;
        for (size_t i = 0; i < p.tiles.size(); i++)
            z.push_back({p.ring.empty() ? std::uint8_t(1) : p.ring[i], p.tiles[i]});
        std::sort(z.begin(), z.end());
        p.tiles.clear();
        p.ring.clear();
        for (auto& [rg, pl] : z) { p.ring.push_back(rg); p.tiles.push_back(pl); }
    }
    std::sort(patches.begin(), patches.end());
    patches.erase(std::unique(patches.begin(), patches.end()), patches.end());
}

KPatchList enumerate_1patches(const TileSet& ts, const PairTable& pairs) {
    KPatchList out;
    out.k = 1;
    for (int cs = 0; cs < ts.count(); cs++) {
        Placement center{cs, 0, Axial{0, 0}};
        CellSet ccells = placement_cells(ts, center);
        const CellSet& targets = ts.rot_halo_vertex(cs, 0);
        // candidates per target cell: legal pairs plus vertex-only touchers
        std::unordered_map<CellKey, std::vector<Placement>> cands;
        auto add_cand = [&](const Placement& p) {
            for (CellKey k : placement_cells(ts, p)) {
                if (std::binary_search(targets.begin(), targets.end(), k))
                    cands[k].push_back(p);
            }
        };
        for (const auto& p : pairs.rel[cs]) add_cand(p);
        // vertex-only touchers: placements covering a target cell, disjoint from the
        // center, not edge-sharing with it
        std::set<Placement> seen(pairs.rel[cs].begin(), pairs.rel[cs].end());
        for (CellKey tk : targets) {
            for (const auto& p : placements_containing(ts, tk)) {
                if (seen.count(p)) continue;
                if (!placements_disjoint(ts, center, p)) continue;
                if (placements_edge_share(ts, center, p)) continue;  // would be a pair
                if (!placements_vertex_share(ts, center, p)) continue;
                seen.insert(p);
                add_cand(p);
            }
        }
        // exact-cover style backtracking over target cells
        std::vector<Placement> chosen;
        CellSet used = ccells;
        std::vector<CellKey> uncovered(targets.begin(), targets.end());
        struct Frame {};
        std::function<void()> bt = [&]() {
            // first uncovered target
            CellKey t = 0;
            bool any = false;
            for (CellKey k : uncovered) {
                if (!std::binary_search(used.begin(), used.end(), k)) { t = k; any = true; break; }
            }
            if (!any) {
                KPatch p;
                p.center_shape = cs;
                p.tiles = chosen;
                p.ring.assign(chosen.size(), 1);
                out.patches.push_back(std::move(p));
                return;
            }
            auto it = cands.find(t);
            if (it == cands.end()) return;
            for (const auto& p : it->second) {
                CellSet pc = placement_cells(ts, p);
                if (!cellsets_disjoint(used, pc)) continue;
                bool ok = true;
                for (const auto& q : chosen) {
                    if (placements_edge_share(ts, q, p) &&
                        !(pairs.legal(q, p) && pairs.legal(p, q))) { ok = false; break; }
                }
                if (!ok) continue;
                // center-adjacent placements must be legal pairs with the center
                if (placements_edge_share(ts, center, p) && !pairs.legal_rel(cs, p)) continue;
                chosen.push_back(p);
                CellSet save = used;
                CellSet merged;
                merged.reserve(used.size() + pc.size());
                std::merge(used.begin(), used.end(), pc.begin(), pc.end(),
                           std::back_inserter(merged));
                used = std::move(merged);
                bt();
                used = std::move(save);
                chosen.pop_back();
            }
        };
        bt();
    }
    out.sort_canonical();
    return out;
}

namespace {

// compatibility of overlaying patch Q (center at placement `at`) onto patch P:
// tiles must agree where they overlap
struct PatchCells {
    // cell -> tile id (center = -1, corona tiles by index)
    std::unordered_map<CellKey, int> owner;
};

PatchCells patch_cells(const TileSet& ts, const KPatch& p) {
    PatchCells pc;
    Placement center{p.center_shape, 0, Axial{0, 0}};
    for (CellKey k : placement_cells(ts, center)) pc.owner[k] = -1;
    for (size_t i = 0; i < p.tiles.size(); i++)
        for (CellKey k : placement_cells(ts, p.tiles[i])) pc.owner[k] = int(i);
    return pc;
}

bool overlay_compatible(const TileSet& ts, const KPatch& P, const PatchCells& pcells,
                        const Placement& at, const KPatch& Q) {
    // transformed tiles of Q (center + corona) against P's cell owners
    GridPose g = at.pose();
    auto check_tile = [&](const Placement& tq) {
        Placement w = transform(g, tq);
        int expect = -2;  // unknown
        bool first = true;
        for (CellKey k : placement_cells(ts, w)) {
            auto it = pcells.owner.find(k);
            int own = it == pcells.owner.end() ? -3 : it->second;
            if (first) { expect = own; first = false; }
            if (own == -3) continue;  // outside P
            // overlapping some P tile: the whole placement must equal that tile
            const Placement pt = own == -1 ? Placement{P.center_shape, 0, Axial{0, 0}}
                                           : P.tiles[size_t(own)];
            if (!(pt == w)) return false;
        }
        (void)expect;
        return true;
    };
    if (!check_tile(Placement{Q.center_shape, 0, Axial{0, 0}})) return false;
    for (const auto& tq : Q.tiles)
        if (!check_tile(tq)) return false;
    return true;
}

}  // namespace

KPatchList reduce(const TileSet& ts, const KPatchList& list) {
    KPatchList cur = list;
    cur.sort_canonical();
    std::vector<char> alive(cur.patches.size(), 1);
    std::vector<PatchCells> pcells(cur.patches.size());
    for (size_t i = 0; i < cur.patches.size(); i++) pcells[i] = patch_cells(ts, cur.patches[i]);

    // overlay candidates for tile T of patch P must contain the tile
    // relative_to(T, P.center) in their corona; index patches by contained tiles
    auto pl_hash = [](const Placement& p) {
        return (std::uint64_t(p.shape) << 58) ^ (std::uint64_t(p.rot6) << 54) ^
               (std::uint64_t(std::uint32_t(p.t.q)) << 27) ^ std::uint64_t(std::uint32_t(p.t.r));
    };
    std::unordered_map<std::uint64_t, std::vector<size_t>> by_contained;
    for (size_t j = 0; j < cur.patches.size(); j++) {
        const KPatch& Q = cur.patches[j];
        for (const auto& t : Q.tiles) {
            std::uint64_t key = pl_hash(t) * 31 + std::uint64_t(Q.center_shape);
            by_contained[key].push_back(j);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cur.patches.size(); i++) {
            if (!alive[i]) continue;
            const KPatch& P = cur.patches[i];
            Placement pcenter{P.center_shape, 0, Axial{0, 0}};
            bool ok_all = true;
            for (size_t ti = 0; ti < P.tiles.size(); ti++) {
                const auto& T = P.tiles[ti];
                bool ring1 = P.ring.empty() || P.ring[ti] == 1;
                bool found = false;
                if (ring1) {
                    // the overlay must contain the center tile of P in its corona
                    Placement need = relative_to(T, pcenter);
                    std::uint64_t key = pl_hash(need) * 31 + std::uint64_t(T.shape);
                    auto it = by_contained.find(key);
                    if (it != by_contained.end()) {
                        for (size_t j : it->second) {
                            if (!alive[j]) continue;
                            if (cur.patches[j].center_shape != T.shape) continue;
                            if (overlay_compatible(ts, P, pcells[i], T, cur.patches[j])) {
                                found = true;
                                break;
                            }
                        }
                    }
                } else {
                    for (size_t j = 0; j < cur.patches.size(); j++) {
                        if (!alive[j] || cur.patches[j].center_shape != T.shape) continue;
                        if (overlay_compatible(ts, P, pcells[i], T, cur.patches[j])) {
                            found = true;
                            break;
                        }
                    }
                }
                if (!found) { ok_all = false; break; }
            }
            if (!ok_all) { alive[i] = 0; changed = true; }
        }
    }
    KPatchList out;
    out.k = cur.k;
    out.reduced = true;
    for (size_t i = 0; i < cur.patches.size(); i++)
        if (alive[i]) out.patches.push_back(cur.patches[i]);
    return out;
}

KPatchList extend_k(const TileSet& ts, const KPatchList& km1) {
    if (!km1.reduced) throw std::invalid_argument("extend_k: input list must be reduced");
    int k = km1.k + 1;
    std::vector<std::vector<size_t>> by_center(ts.count());
    for (size_t i = 0; i < km1.patches.size(); i++)
        by_center[km1.patches[i].center_shape].push_back(i);

    KPatchList out;
    out.k = k;
    for (const auto& P : km1.patches) {
        // surround every ring-1 tile of P with a (k-1)-patch from the list
        std::vector<size_t> ring1;
        for (size_t i = 0; i < P.tiles.size(); i++)
            if (P.ring[i] == 1) ring1.push_back(i);
        // accumulate a growing tile map (placement set)
        struct Acc {
            std::map<Placement, int> ring_of;  // min ring
            std::unordered_map<CellKey, Placement> owner;
        };
        Acc acc0;
        acc0.ring_of[Placement{P.center_shape, 0, Axial{0, 0}}] = 0;
        for (size_t i = 0; i < P.tiles.size(); i++) acc0.ring_of[P.tiles[i]] = P.ring[i];
        for (auto& [pl, rg] : acc0.ring_of)
            for (CellKey c : placement_cells(ts, pl)) acc0.owner[c] = pl;

        std::function<void(size_t, Acc&)> go = [&](size_t idx, Acc& acc) {
            if (idx == ring1.size()) {
                KPatch np;
                np.center_shape = P.center_shape;
                for (auto& [pl, rg] : acc.ring_of) {
                    if (rg == 0) continue;
                    np.tiles.push_back(pl);
                    np.ring.push_back(std::uint8_t(rg));
                }
                out.patches.push_back(std::move(np));
                return;
            }
            const Placement& T = P.tiles[ring1[idx]];
            GridPose g = T.pose();
            for (size_t j : by_center[T.shape]) {
                const KPatch& Q = km1.patches[j];
                // overlay Q at T; check compatibility with acc; build extension
                bool ok = true;
                std::vector<std::pair<Placement, int>> added;
                for (size_t qi = 0; qi < Q.tiles.size() && ok; qi++) {
                    Placement w = transform(g, Q.tiles[qi]);
                    auto it = acc.ring_of.find(w);
                    if (it != acc.ring_of.end()) continue;  // same tile already there
                    // no overlap with different tiles
                    for (CellKey c : placement_cells(ts, w)) {
                        auto oi = acc.owner.find(c);
                        if (oi != acc.owner.end() && !(oi->second == w)) { ok = false; break; }
                    }
                    if (ok) added.push_back({w, 0});
                }
                if (!ok) continue;
                Acc next = acc;
                for (auto& [w, rg] : added) {
                    // ring = 1 + min ring of touched existing tiles
                    int best = k;
                    for (auto& [pl, prg] : next.ring_of) {
                        if (placements_vertex_share(ts, pl, w) || placements_edge_share(ts, pl, w))
                            best = std::min(best, prg + 1);
                    }
                    next.ring_of[w] = best;
                    for (CellKey c : placement_cells(ts, w)) next.owner[c] = w;
                }
                go(idx + 1, next);
            }
        };
        go(0, acc0);
    }
    out.sort_canonical();
    return reduce(ts, out);
}

// ---------------------------------------------------------------------------
// forcing chain
// ---------------------------------------------------------------------------

namespace {

TileSet hat_turtle_set() {
    return TileSet({{"hat", hat_cells()}, {"turtle", turtle_cells()}});
}

std::vector<KiteCell> union_cells(const std::vector<GridTile>& tiles) {
    std::vector<KiteCell> out;
    for (const auto& t : tiles)
        for (auto c : t.cells()) out.push_back(c);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("union_cells: overlapping tiles");
    return out;
}

}  // namespace

ForcingChain run_forcing_chain() {
    ForcingChain fc;
    TileSet ht = hat_turtle_set();
    PairTable pairs0 = legal_pairs(ht);
    KPatchList raw0 = enumerate_1patches(ht, pairs0);
    fc.reduced_hat_turtle = reduce(ht, raw0);

    int hat_i = ht.index("hat"), turtle_i = ht.index("turtle");
    // the unique all-hats corona around a turtle
    const KPatch* t6h_patch = nullptr;
    for (const auto& p : fc.reduced_hat_turtle.patches) {
        if (p.center_shape != turtle_i) continue;
        bool all_hats = true;
        for (const auto& t : p.tiles)
            if (t.shape != hat_i) { all_hats = false; break; }
        if (all_hats) {
            if (t6h_patch) throw std::logic_error("T6H is not unique");
            t6h_patch = &p;
        }
    }
    if (!t6h_patch) throw std::logic_error("T6H not found");
    fc.t6h.push_back(GridTile{TileKind::Turtle, GridPose{}});
    for (const auto& t : t6h_patch->tiles)
        fc.t6h.push_back(GridTile{TileKind::Hat, t.pose()});

    // stage {hat, T6H}: the forced hat
    TileSet ht6({{"hat", hat_cells()}, {"t6h", union_cells(fc.t6h)}});
    PairTable pairs1 = legal_pairs(ht6);
    KPatchList raw1 = enumerate_1patches(ht6, pairs1);
    fc.reduced_hat_t6h = reduce(ht6, raw1);
    int t6h_i = ht6.index("t6h"), hat1_i = ht6.index("hat");
    std::optional<std::set<Placement>> common;
    for (const auto& p : fc.reduced_hat_t6h.patches) {
        if (p.center_shape != t6h_i) continue;
        std::set<Placement> hats;
        for (const auto& t : p.tiles)
            if (t.shape == hat1_i) hats.insert(t);
        if (!common) common = hats;
        else {
            std::set<Placement> inter;
            std::set_intersection(common->begin(), common->end(), hats.begin(), hats.end(),
                                  std::inserter(inter, inter.begin()));
            common = inter;
        }
    }
    if (!common || common->size() != 1)
        throw std::logic_error("forced hat for T7H not unique");
    fc.forced_hat_in_t7h = *common->begin();
    fc.t7h = fc.t6h;
    fc.t7h.push_back(GridTile{TileKind::Hat, fc.forced_hat_in_t7h.pose()});

    // stage {hat, T7H}: the forced T7H around every hat
    TileSet ht7({{"hat", hat_cells()}, {"t7h", union_cells(fc.t7h)}});
    PairTable pairs2 = legal_pairs(ht7);
    KPatchList raw2 = enumerate_1patches(ht7, pairs2);
    fc.reduced_hat_t7h = reduce(ht7, raw2);
    int t7h_i = ht7.index("t7h"), hat2_i = ht7.index("hat");
    std::optional<std::set<Placement>> common2;
    for (const auto& p : fc.reduced_hat_t7h.patches) {
        if (p.center_shape != hat2_i) continue;
        std::set<Placement> t7hs;
        for (const auto& t : p.tiles)
            if (t.shape == t7h_i) t7hs.insert(t);
        if (!common2) common2 = t7hs;
        else {
            std::set<Placement> inter;
            std::set_intersection(common2->begin(), common2->end(), t7hs.begin(), t7hs.end(),
                                  std::inserter(inter, inter.begin()));
            common2 = inter;
        }
    }
    if (!common2 || common2->size() != 1)
        throw std::logic_error("forced T7H for T8H not unique");
    fc.forced_t7h_in_t8h = *common2->begin();
    // T8H in its own frame: hat at identity plus the forced T7H
    fc.t8h.push_back(GridTile{TileKind::Hat, GridPose{}});
    GridPose g = fc.forced_t7h_in_t8h.pose();
    for (const auto& t : fc.t7h) fc.t8h.push_back(GridTile{t.kind, compose(g, t.pose)});
    return fc;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

namespace {

// closed CCW corner loop of a cell union
std::vector<Coord4> boundary_loop(const std::vector<KiteCell>& cells) {
    std::map<Coord4, Coord4> next;
    std::set<std::pair<Coord4, Coord4>> directed;
    for (auto c : cells) {
        auto cs = cell_corners(c);
        for (int i = 0; i < 4; i++) directed.insert({cs[i], cs[(i + 1) % 4]});
    }
    for (const auto& [a, b] : directed) {
        if (!directed.count({b, a})) {
            if (next.count(a)) throw std::logic_error("boundary_loop: pinch point");
            next[a] = b;
        }
    }
    if (next.empty()) throw std::logic_error("boundary_loop: empty boundary");
    Coord4 start = next.begin()->first;
    std::vector<Coord4> loop{start};
    Coord4 cur = next[start];
    while (!(cur == start)) {
        loop.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) throw std::logic_error("boundary_loop: open boundary");
        cur = it->second;
    }
    if (loop.size() != next.size()) throw std::logic_error("boundary_loop: multiple loops");
    return loop;
}

std::vector<Coord4> canon_path(const std::vector<Coord4>& seg) {
    std::vector<Coord4> best;
    for (int r = 0; r < 6; r++) {
        std::vector<Coord4> pts;
        pts.reserve(seg.size());
        for (const auto& v : seg) pts.push_back(v.rot(2 * r));
        Coord4 p0 = pts[0];
        for (auto& v : pts) v = v - p0;
        if (best.empty() || pts < best) best = pts;
    }
    return best;
}

}  // namespace

ClusterClassification classify_nine(const ForcingChain& fc) {
    ClusterClassification cc;
    cc.t7h_tiles = fc.t7h;
    cc.t8h_tiles = fc.t8h;

    TileSet cl({{"t7h", union_cells(fc.t7h)}, {"t8h", union_cells(fc.t8h)}});
    PairTable pairs = legal_pairs(cl, /*probe=*/false);
    KPatchList raw = enumerate_1patches(cl, pairs);
    cc.reduced_clusters = reduce(cl, raw);

    int t7h_i = cl.index("t7h");

    // corner -> incident tiles; tiling vertices are corners where the center and
    // at least two corona tiles meet
    struct PatchInfo {
        const KPatch* patch;
        std::vector<Coord4> verts;   // the 6 tiling vertices on the center boundary
    };
    auto corners_of_placement = [&](const Placement& p) {
        std::set<Coord4> cs;
        GridPose g = p.pose();
        for (auto base : cl.base_cells(p.shape)) {
            for (const auto& v : cell_corners(g(base))) cs.insert(v);
        }
        return cs;
    };

    // classes keyed by (center shape, sorted vertex set)
    std::map<std::pair<int, std::vector<Coord4>>, std::vector<const KPatch*>> classes;
    for (const auto& p : cc.reduced_clusters.patches) {
        std::set<Coord4> center_corners =
            corners_of_placement(Placement{p.center_shape, 0, Axial{0, 0}});
        std::map<Coord4, int> count;
        for (const auto& t : p.tiles) {
            for (const auto& v : corners_of_placement(t))
                if (center_corners.count(v)) count[v]++;
        }
        std::vector<Coord4> verts;
        for (const auto& [v, n] : count)
            if (n >= 2) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        if (verts.size() != 6) throw std::logic_error("cluster patch without exactly 6 vertices");
        classes[{p.center_shape, verts}].push_back(&p);
    }
    if (classes.size() != 9) throw std::logic_error("expected exactly nine cluster classes");

    // per class: boundary segments between consecutive vertices
    struct RawClass {
        int center_shape;
        std::vector<Coord4> loop;
        std::array<size_t, 6> cut;            // loop indices of the vertices, CCW
        std::array<std::vector<Coord4>, 6> segs;
    };
    std::vector<RawClass> rcs;
    std::vector<std::vector<const KPatch*>> rc_patches;
    for (const auto& [key, plist] : classes) {
        RawClass rc;
        rc.center_shape = key.first;
        rc.loop = boundary_loop(key.first == t7h_i ? union_cells(fc.t7h) : union_cells(fc.t8h));
        std::set<Coord4> vset(key.second.begin(), key.second.end());
        std::vector<size_t> idx;
        for (size_t i = 0; i < rc.loop.size(); i++)
            if (vset.count(rc.loop[i])) idx.push_back(i);
        if (idx.size() != 6) throw std::logic_error("vertices not on boundary loop");
        for (int a = 0; a < 6; a++) {
            rc.cut[a] = idx[a];
            size_t i0 = idx[a], i1 = idx[(a + 1) % 6];
            std::vector<Coord4> seg;
            for (size_t i = i0;; i = (i + 1) % rc.loop.size()) {
                seg.push_back(rc.loop[i]);
                if (i == i1) break;
            }
            rc.segs[a] = seg;
        }
        rcs.push_back(rc);
        rc_patches.push_back(plist);
    }

    // signed shape classes: congruent canonical paths share a class
    std::map<std::vector<Coord4>, int> path_class;
    std::vector<std::vector<Coord4>> class_path;
    auto class_of = [&](const std::vector<Coord4>& seg) {
        auto cp = canon_path(seg);
        auto it = path_class.find(cp);
        if (it != path_class.end()) return it->second;
        int id = int(class_path.size());
        path_class[cp] = id;
        class_path.push_back(cp);
        return id;
    };
    std::vector<std::array<int, 6>> seq(rcs.size());
    for (size_t ci = 0; ci < rcs.size(); ci++)
        for (int a = 0; a < 6; a++) seq[ci][a] = class_of(rcs[ci].segs[a]);
    if (path_class.size() != 15) throw std::logic_error("expected 15 signed segment shapes");

    // mate relation: reversed segment, canonical
    std::vector<int> mate(class_path.size(), -1);
    for (size_t ci = 0; ci < rcs.size(); ci++) {
        for (int a = 0; a < 6; a++) {
            std::vector<Coord4> rev(rcs[ci].segs[a].rbegin(), rcs[ci].segs[a].rend());
            auto cp = canon_path(rev);
            auto it = path_class.find(cp);
            if (it == path_class.end()) throw std::logic_error("segment mate shape missing");
            int m = it->second;
            int c = seq[ci][a];
            if (mate[c] != -1 && mate[c] != m) throw std::logic_error("inconsistent mate relation");
            mate[c] = m;
        }
    }

    // bridge: unique assignment of classes to HexKinds and shape-classes to labels
    // consistent with the frozen table (cyclic alignment per class)
    const auto& table = hexagon_table();
    std::array<int, 9> kind_of_class;
    kind_of_class.fill(-1);
    std::array<int, 9> shift_of_class{};
    std::map<int, EdgeLabel> letter;
    std::vector<std::tuple<std::array<int, 9>, std::array<int, 9>, std::map<int, EdgeLabel>>> sols;
    std::array<bool, 9> kind_used{};

    std::function<void(size_t)> assign = [&](size_t ci) {
        if (ci == rcs.size()) {
            sols.push_back({kind_of_class, shift_of_class, letter});
            return;
        }
        for (int kk = 0; kk < 9; kk++) {
            if (kind_used[kk]) continue;
            for (int shift = 0; shift < 6; shift++) {
                std::map<int, EdgeLabel> saved = letter;
                bool ok = true;
                for (int a = 0; a < 6 && ok; a++) {
                    int cid = seq[ci][a];
                    EdgeLabel lab = table[kk].labels[(a + shift) % 6];
                    auto it = letter.find(cid);
                    if (it != letter.end() && !(it->second == lab)) { ok = false; break; }
                    letter[cid] = lab;
                    auto mt = letter.find(mate[cid]);
                    if (mt != letter.end() && !(mt->second == lab.mate())) { ok = false; break; }
                    letter[mate[cid]] = lab.mate();
                }
                if (ok) {
                    kind_of_class[ci] = kk;
                    shift_of_class[ci] = shift;
                    kind_used[kk] = true;
                    assign(ci + 1);
                    kind_used[kk] = false;
                }
                letter = saved;
            }
        }
    };
    assign(0);
    if (sols.size() != 1) throw std::logic_error("hexagon bridge not unique: " +
                                                 std::to_string(sols.size()) + " isomorphisms");
    auto [komap, shmap, lmap] = sols[0];

    // fill entries: hex edge e corresponds to segment (e - shift ... ) -- the shift
    // maps segment index a to table edge (a + shift), so edge e uses a = e - shift
    for (size_t ci = 0; ci < rcs.size(); ci++) {
        ClusterEntry e;
        e.kind = HexKind(komap[ci]);
        e.is_t8h = rcs[ci].center_shape != t7h_i;
        for (int edge = 0; edge < 6; edge++) {
            int a = ((edge - shmap[ci]) % 6 + 6) % 6;
            e.segs[edge] = rcs[ci].segs[a];
            e.vertices[edge] = rcs[ci].segs[a].front();
            e.labels[edge] = lmap.at(seq[ci][a]);
            if (!(e.labels[edge] == table[komap[ci]].labels[edge]))
                throw std::logic_error("bridge label mismatch");
        }
        cc.entries[size_t(e.kind)] = e;
    }
    return cc;
}

// ---------------------------------------------------------------------------
// cluster decomposition of hat/turtle patches
// ---------------------------------------------------------------------------

ClusterDecomposition compose_clusters(const std::vector<GridTile>& tiles) {
    // forced grouping: T6H around every turtle whose corona is present, forced hat
    // to T7H, then the extra hat to T8H where present. Relies on the frozen forcing
    // chain geometry.
    static const ForcingChain fc = run_forcing_chain();

    ClusterDecomposition out;
    std::map<GridTile, int> index;
    for (size_t i = 0; i < tiles.size(); i++) index[tiles[i]] = int(i);
    std::vector<char> used(tiles.size(), 0);

    // T7H relative to its turtle: tiles of fc.t7h are in the T6H frame (turtle at id)
    // find each turtle; try to collect the full T7H around it
    for (size_t i = 0; i < tiles.size(); i++) {
        if (tiles[i].kind != TileKind::Turtle) continue;
        GridPose g = tiles[i].pose;  // maps T7H frame onto this turtle
        ClusterDecomposition::Cluster cl;
        cl.is_t8h = false;
        cl.pose = g;
        bool complete = true;
        for (const auto& t : fc.t7h) {
            GridTile w{t.kind, compose(g, t.pose)};
            auto it = index.find(w);
            if (it == index.end()) { complete = false; break; }
            cl.tile_indices.push_back(it->second);
        }
        if (!complete) continue;
        for (int ti : cl.tile_indices) used[ti] = 1;
        out.clusters.push_back(std::move(cl));
    }
    // extra hats: fc.t8h frame has hat at identity, T7H at forced pose; so for a
    // T7H cluster at pose g, the extra hat sits at g * forced^-1
    GridPose t7h_in_t8h = fc.forced_t7h_in_t8h.pose();
    for (auto& cl : out.clusters) {
        GridPose hat_pose = compose(cl.pose, t7h_in_t8h.inverse());
        GridTile w{TileKind::Hat, hat_pose};
        auto it = index.find(w);
        if (it != index.end() && !used[size_t(it->second)]) {
            cl.is_t8h = true;
            cl.tile_indices.push_back(it->second);
            used[size_t(it->second)] = 1;
            // re-anchor the cluster to the T8H frame (hat at identity)
            cl.pose = hat_pose;
        }
    }
    for (size_t i = 0; i < tiles.size(); i++)
        if (!used[i]) out.unassigned.push_back(int(i));
    return out;
}

}  // namespace spectre
