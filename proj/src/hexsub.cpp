#include "spectre/hexsub.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace spectre {

// ---------------------------------------------------------------------------
// honeycomb balls
// ---------------------------------------------------------------------------

const HexBall& HexBall::of(int k) {
    static std::map<int, HexBall> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    HexBall b;
    b.k = k;
    b.cells.push_back({0, 0});
    std::vector<Axial> frontier{{0, 0}};
    std::set<Axial> seen{{0, 0}};
    for (int ring = 1; ring <= k; ring++) {
        std::vector<Axial> next;
        for (auto c : frontier) {
            for (auto d : kHexDirs) {
                Axial n = c + d;
                if (!seen.count(n)) {
                    seen.insert(n);
                    b.cells.push_back(n);
                    next.push_back(n);
                }
            }
        }
        frontier = next;
    }
    for (size_t i = 0; i < b.cells.size(); i++) b.index[b.cells[i]] = int(i);
    b.nbr.resize(b.cells.size());
    for (size_t i = 0; i < b.cells.size(); i++) {
        for (int d = 0; d < 6; d++) {
            Axial n = b.cells[i] + kHexDirs[d];
            auto f = b.index.find(n);
            b.nbr[i][d] = f == b.index.end() ? -1 : f->second;
        }
    }
    return cache.emplace(k, std::move(b)).first->second;
}

std::array<size_t, 9> HexPatchList::counts_by_center() const {
    std::array<size_t, 9> c{};
    for (const auto& p : patches) c[size_t(cfg_kind(p.center()))]++;
    return c;
}

std::uint64_t HexPatchList::content_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) { h ^= x; h *= 1099511628211ull; };
    mix(std::uint64_t(k));
    for (const auto& p : patches)
        for (auto c : p.cfg) mix(c);
    return h;
}

// ---------------------------------------------------------------------------
// hexagon-level enumeration
// ---------------------------------------------------------------------------

namespace {

// label of the edge of (cfg) facing direction d
EdgeLabel cfg_facing(HexCfg c, int d) { return facing_label(cfg_kind(c), cfg_rot(c), d); }

bool cfg_pair_ok(HexCfg a, HexCfg b, int d_ab) {
    return matches(cfg_facing(a, d_ab), cfg_facing(b, (d_ab + 3) % 6));
}

// configs by (direction, facing label) for candidate generation
const std::vector<HexCfg>& configs_facing(int d, EdgeLabel l) {
    static const auto table = [] {
        std::map<std::pair<int, EdgeLabel>, std::vector<HexCfg>> t;
        for (int kind = 0; kind < 9; kind++)
            for (int rot = 0; rot < 6; rot++)
                for (int d2 = 0; d2 < 6; d2++) {
                    HexCfg c = make_cfg(HexKind(kind), rot);
                    t[{d2, cfg_facing(c, d2)}].push_back(c);
                }
        return t;
    }();
    static const std::vector<HexCfg> empty;
    auto it = table.find({d, l});
    return it == table.end() ? empty : it->second;
}

}  // namespace

HexPatchList hex_1patches() {
    const HexBall& ball = HexBall::of(1);
    HexPatchList out;
    out.k = 1;
    for (int kind = 0; kind < 9; kind++) {
        HexPatch p;
        p.k = 1;
        p.cfg.assign(7, kUnsetCfg);
        p.cfg[0] = make_cfg(HexKind(kind), 0);
        std::function<void(int)> bt = [&](int d) {
            if (d == 6) {
                out.patches.push_back(p);
                return;
            }
            EdgeLabel need = cfg_facing(p.cfg[0], d).mate();
            for (HexCfg c : configs_facing((d + 3) % 6, need)) {
                // ring-internal matching with the previous neighbour: cells
                // kHexDirs[d-1] and kHexDirs[d] are adjacent along direction d+1
                if (d > 0 && !cfg_pair_ok(p.cfg[d], c, (d + 1) % 6)) continue;
                if (d == 5 && !cfg_pair_ok(c, p.cfg[1], 1)) continue;
                p.cfg[1 + d] = c;
                bt(d + 1);
                p.cfg[1 + d] = kUnsetCfg;
            }
        };
        bt(0);
    }
    return out;
}

namespace {

// index maps for overlay: dst[i] = index in ball(kp) of (rot(ball(kq).cells[i]) + at),
// or -1 when outside
std::vector<int> overlay_map(int kp, int kq, Axial at, int rot) {
    const HexBall& bp = HexBall::of(kp);
    const HexBall& bq = HexBall::of(kq);
    std::vector<int> m(bq.cells.size(), -1);
    for (size_t i = 0; i < bq.cells.size(); i++) {
        Axial c = bq.cells[i].rot60(rot) + at;
        auto it = bp.index.find(c);
        if (it != bp.index.end()) m[i] = it->second;
    }
    return m;
}

struct OverlayMaps {
    // maps[cell][rot] for overlaying ball(k) onto ball(k) at every cell of ball(k)
    std::vector<std::array<std::vector<int>, 6>> maps;
    static const OverlayMaps& of(int k) {
        static std::map<int, OverlayMaps> cache;
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        OverlayMaps om;
        const HexBall& b = HexBall::of(k);
        om.maps.resize(b.cells.size());
        for (size_t i = 0; i < b.cells.size(); i++)
            for (int r = 0; r < 6; r++) om.maps[i][r] = overlay_map(k, k, b.cells[i], r);
        return cache.emplace(k, std::move(om)).first->second;
    }
};

HexCfg cfg_rotated(HexCfg c, int r) {
    return c == kUnsetCfg ? kUnsetCfg : make_cfg(cfg_kind(c), (cfg_rot(c) + r) % 6);
}

}  // namespace

HexPatchList hex_reduce(const HexPatchList& list) {
    HexPatchList cur = list;
    std::sort(cur.patches.begin(), cur.patches.end());
    cur.patches.erase(std::unique(cur.patches.begin(), cur.patches.end()), cur.patches.end());
    int k = cur.k;
    const HexBall& ball = HexBall::of(k);
    const OverlayMaps& om = OverlayMaps::of(k);
    size_t n = cur.patches.size();
    std::vector<char> alive(n, 1);

    // candidate index: patches by center config plus their rotated 1-ball signature
    auto sig_of = [&](const HexPatch& q, int rot) {
        // 1-ball of the rotated patch: center + 6 neighbours in direction order
        std::uint64_t s = cfg_rotated(q.cfg[0], rot);
        for (int d = 0; d < 6; d++) {
            // neighbour in (unrotated) direction d - rot
            int dd = ((d - rot) % 6 + 6) % 6;
            s = s * 131 + cfg_rotated(q.cfg[1 + dd], rot);
        }
        return s;
    };
    std::unordered_map<std::uint64_t, std::vector<std::pair<size_t, int>>> index;
    auto build_index = [&] {
        index.clear();
        for (size_t j = 0; j < n; j++) {
            if (!alive[j]) continue;
            for (int r = 0; r < 6; r++) index[sig_of(cur.patches[j], r)].push_back({j, r});
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        build_index();
        for (size_t i = 0; i < n; i++) {
            if (!alive[i]) continue;
            const HexPatch& P = cur.patches[i];
            bool ok_all = true;
            for (size_t ci = 1; ci < P.cfg.size() && ok_all; ci++) {
                if (P.cfg[ci] == kUnsetCfg) continue;
                int dist = ball.cells[ci].dist();
                HexCfg c = P.cfg[ci];
                int rot = cfg_rot(c);
                bool found = false;
                if (dist <= k - 1) {
                    // full 1-ball known: indexed lookup
                    std::uint64_t s = c;
                    for (int d = 0; d < 6; d++) s = s * 131 + P.cfg[size_t(ball.nbr[ci][d])];
                    auto it = index.find(s);
                    if (it != index.end()) {
                        for (auto [j, r] : it->second) {
                            if (!alive[j] || r != rot) continue;
                            if (cfg_kind(cur.patches[j].cfg[0]) != cfg_kind(c)) continue;
                            const auto& m = om.maps[ci][rot];
                            bool comp = true;
                            for (size_t qi = 0; qi < m.size() && comp; qi++) {
                                if (m[qi] < 0) continue;
                                HexCfg qc = cfg_rotated(cur.patches[j].cfg[qi], rot);
                                HexCfg pc = P.cfg[size_t(m[qi])];
                                if (qc != kUnsetCfg && pc != kUnsetCfg && qc != pc) comp = false;
                            }
                            if (comp) { found = true; break; }
                        }
                    }
                } else {
                    for (size_t j = 0; j < n && !found; j++) {
                        if (!alive[j]) continue;
                        if (cfg_kind(cur.patches[j].cfg[0]) != cfg_kind(c)) continue;
                        const auto& m = om.maps[ci][rot];
                        bool comp = true;
                        for (size_t qi = 0; qi < m.size() && comp; qi++) {
                            if (m[qi] < 0) continue;
                            HexCfg qc = cfg_rotated(cur.patches[j].cfg[qi], rot);
                            HexCfg pc = P.cfg[size_t(m[qi])];
                            if (qc != kUnsetCfg && pc != kUnsetCfg && qc != pc) comp = false;
                        }
                        if (comp) found = true;
                    }
                }
                if (!found) ok_all = false;
            }
            if (!ok_all) { alive[i] = 0; changed = true; }
        }
    }
    HexPatchList out;
    out.k = k;
    out.reduced = true;
    for (size_t i = 0; i < n; i++)
        if (alive[i]) out.patches.push_back(cur.patches[i]);
    return out;
}

HexPatchList hex_extend(const HexPatchList& km1) {
    if (!km1.reduced) throw std::invalid_argument("hex_extend: input must be reduced");
    int k = km1.k + 1;
    const HexBall& bk = HexBall::of(k);
    const HexBall& bkm1 = HexBall::of(k - 1);

    // overlay maps from ball(k-1) into ball(k) at the six ring-1 cells
    std::array<std::array<std::vector<int>, 6>, 6> maps;  // [dir][rot]
    for (int d = 0; d < 6; d++)
        for (int r = 0; r < 6; r++) maps[d][r] = overlay_map(k, k - 1, kHexDirs[d], r);

    std::array<std::vector<const HexPatch*>, 9> by_kind;
    for (const auto& p : km1.patches) by_kind[size_t(cfg_kind(p.cfg[0]))].push_back(&p);

    std::set<std::vector<HexCfg>> result;
    for (const auto& P : km1.patches) {
        std::vector<HexCfg> acc(bk.cells.size(), kUnsetCfg);
        for (size_t i = 0; i < P.cfg.size(); i++)
            acc[size_t(bk.index.at(bkm1.cells[i]))] = P.cfg[i];
        std::function<void(int, std::vector<HexCfg>&)> go = [&](int d, std::vector<HexCfg>& a) {
            if (d == 6) {
                result.insert(a);
                return;
            }
            HexCfg at = a[size_t(bk.index.at(kHexDirs[d]))];
            int rot = cfg_rot(at);
            for (const HexPatch* Q : by_kind[size_t(cfg_kind(at))]) {
                const auto& m = maps[d][rot];
                bool comp = true;
                for (size_t qi = 0; qi < m.size() && comp; qi++) {
                    if (m[qi] < 0) continue;
                    HexCfg qc = cfg_rotated(Q->cfg[qi], rot);
                    HexCfg pc = a[size_t(m[qi])];
                    if (pc != kUnsetCfg && qc != pc) comp = false;
                }
                if (!comp) continue;
                std::vector<HexCfg> next = a;
                for (size_t qi = 0; qi < m.size(); qi++)
                    if (m[qi] >= 0) next[size_t(m[qi])] = cfg_rotated(Q->cfg[qi], rot);
                go(d + 1, next);
            }
        };
        go(0, acc);
    }
    HexPatchList raw;
    raw.k = k;
    for (auto& v : result) {
        HexPatch p;
        p.k = k;
        p.cfg = v;
        // a complete k-patch has no unset cells
        if (std::find(p.cfg.begin(), p.cfg.end(), kUnsetCfg) == p.cfg.end())
            raw.patches.push_back(std::move(p));
    }
    return hex_reduce(raw);
}

const HexPatchList& hex_reduced(int k) {
    static std::map<int, HexPatchList> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    HexPatchList l = k == 1 ? hex_reduce(hex_1patches()) : hex_extend(hex_reduced(k - 1));
    return cache.emplace(k, std::move(l)).first->second;
}

// ---------------------------------------------------------------------------
// frozen tables
// ---------------------------------------------------------------------------

#include "tables/cluster_table.inc"
#include "tables/supertile_table.inc"

const std::array<Axial, 7>& supertile_footprint() {
    static const std::array<Axial, 7> r = [] {
        std::array<Axial, 7> a;
        for (int i = 0; i < 7; i++) a[i] = Axial{kFootprint[i][0], kFootprint[i][1]};
        return a;
    }();
    return r;
}

Axial supertile_extra_cell() { return Axial{kFootprintExtra[0], kFootprintExtra[1]}; }

const std::array<SupertileLayout, 9>& supertile_table() {
    static const std::array<SupertileLayout, 9> t = [] {
        std::array<SupertileLayout, 9> out;
        // footprint cell indexing used by kSuperEdges: R cells then X
        std::vector<Axial> cells(supertile_footprint().begin(), supertile_footprint().end());
        cells.push_back(supertile_extra_cell());
        for (int kk = 0; kk < 9; kk++) {
            SupertileLayout& L = out[size_t(kk)];
            L.kind = HexKind(kk);
            std::map<Axial, int> child_at;
            for (int i = 0; i < 8; i++) {
                if (kSuperChildren[kk][i][0] < 0) break;
                SupertileLayout::Child c;
                c.kind = HexKind(kSuperChildren[kk][i][0]);
                c.rot = kSuperChildren[kk][i][1];
                c.at = Axial{kSuperChildren[kk][i][2], kSuperChildren[kk][i][3]};
                child_at[c.at] = int(L.children.size());
                L.children.push_back(c);
            }
            for (int e = 0; e < 6; e++) {
                for (int h = 0; h < kSuperEdgeLen; h++) {
                    int ci = kSuperEdges[kk][e][h][0], d = kSuperEdges[kk][e][h][1];
                    if (ci < 0) break;
                    auto it = child_at.find(cells[size_t(ci)]);
                    if (it == child_at.end())
                        throw std::logic_error("supertile table: superedge cell not a child");
                    L.superedges[size_t(e)].push_back({it->second, d});
                }
            }
        }
        return out;
    }();
    return t;
}

namespace {

const std::vector<GridTile>& cluster_t7h_tiles() {
    static const std::vector<GridTile> t = [] {
        std::vector<GridTile> v;
        for (const auto& row : kT7HTiles)
            v.push_back(GridTile{row[0] == 0 ? TileKind::Hat : TileKind::Turtle,
                                 GridPose{row[1], Axial{row[2], row[3]}, false}});
        return v;
    }();
    return t;
}

const std::vector<GridTile>& cluster_t8h_tiles() {
    static const std::vector<GridTile> t = [] {
        std::vector<GridTile> v;
        for (const auto& row : kT8HTiles)
            v.push_back(GridTile{row[0] == 0 ? TileKind::Hat : TileKind::Turtle,
                                 GridPose{row[1], Axial{row[2], row[3]}, false}});
        return v;
    }();
    return t;
}

bool cluster_is_t8h(HexKind k) { return kClusterIsT8H[size_t(k)] != 0; }

const std::vector<GridTile>& cluster_tiles(HexKind k) {
    return cluster_is_t8h(k) ? cluster_t8h_tiles() : cluster_t7h_tiles();
}

Coord4 cluster_vertex(HexKind k, int e) {
    const auto& v = kClusterVerts[size_t(k)][e];
    return Coord4{v[0], v[1], v[2], v[3]};
}

// boundary corner loop of a cluster (CCW)
std::vector<Coord4> cluster_loop(bool t8h) {
    auto loop_of = [](const std::vector<GridTile>& tiles) {
        std::map<Coord4, Coord4> next;
        std::set<std::pair<Coord4, Coord4>> directed;
        for (const auto& t : tiles) {
            for (auto c : t.cells()) {
                auto cs = cell_corners(c);
                for (int i = 0; i < 4; i++) directed.insert({cs[i], cs[(i + 1) % 4]});
            }
        }
        for (const auto& [a, b] : directed)
            if (!directed.count({b, a})) next[a] = b;
        Coord4 start = next.begin()->first;
        std::vector<Coord4> loop{start};
        for (Coord4 cur = next[start]; !(cur == start); cur = next[cur]) loop.push_back(cur);
        return loop;
    };
    static const std::vector<Coord4> l7 = loop_of(cluster_t7h_tiles());
    static const std::vector<Coord4> l8 = loop_of(cluster_t8h_tiles());
    return t8h ? l8 : l7;
}

// boundary path of hex edge e of kind k (from vertex e to vertex e+1, CCW)
const std::vector<Coord4>& cluster_seg(HexKind k, int e) {
    static const auto table = [] {
        std::array<std::array<std::vector<Coord4>, 6>, 9> t;
        for (int kk = 0; kk < 9; kk++) {
            HexKind kind = HexKind(kk);
            std::vector<Coord4> loop = cluster_loop(cluster_is_t8h(kind));
            for (int e = 0; e < 6; e++) {
                Coord4 v0 = cluster_vertex(kind, e), v1 = cluster_vertex(kind, (e + 1) % 6);
                auto i0 = std::find(loop.begin(), loop.end(), v0) - loop.begin();
                auto i1 = std::find(loop.begin(), loop.end(), v1) - loop.begin();
                if (size_t(i0) == loop.size() || size_t(i1) == loop.size())
                    throw std::logic_error("cluster vertex not on boundary");
                std::vector<Coord4> seg;
                for (size_t i = size_t(i0);; i = (i + 1) % loop.size()) {
                    seg.push_back(loop[i]);
                    if (i == size_t(i1)) break;
                }
                t[size_t(kk)][size_t(e)] = seg;
            }
        }
        return t;
    }();
    return table[size_t(k)][size_t(e)];
}

// relative cluster pose across a matched edge pair: pose of Y such that Y's seg f
// (reversed) coincides with X's seg e
GridPose cluster_rel_pose(HexKind X, int e, HexKind Y, int f) {
    static std::map<std::tuple<HexKind, int, HexKind, int>, GridPose> cache;
    auto key = std::make_tuple(X, e, Y, f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& se = cluster_seg(X, e);
    const auto& sf = cluster_seg(Y, f);
    if (se.size() != sf.size()) throw std::logic_error("cluster_rel_pose: length mismatch");
    for (int r = 0; r < 6; r++) {
        // rotate sf reversed by r, translate to match
        Coord4 first = sf.back().rot(2 * r);
        Coord4 delta = se.front() - first;
        bool ok = true;
        for (size_t i = 0; i < se.size() && ok; i++) {
            if (!(sf[sf.size() - 1 - i].rot(2 * r) + delta == se[i])) ok = false;
        }
        if (ok) {
            // delta must be a hexagon-lattice translation
            // hex lattice: q*A1 + r*A2 with A1=(2,0,2,0), A2=(-2,0,4,0)
            i64 c0 = delta.c[0], c2 = delta.c[2];
            if (delta.c[1] != 0 || delta.c[3] != 0) continue;
            // solve 2q - 2t = c0; 2q + 4t = c2
            i64 det = 2 * 4 - (-2) * 2;  // 12
            i64 qn = c0 * 4 - (-2) * c2, rn = 2 * c2 - c0 * 2;
            if (qn % det || rn % det) continue;
            GridPose g{r, Axial{int(qn / det), int(rn / det)}, false};
            cache[key] = g;
            return g;
        }
    }
    throw std::logic_error("cluster_rel_pose: no aligning pose for " + to_string(X) + ":" +
                           std::to_string(e) + " vs " + to_string(Y) + ":" + std::to_string(f));
}

}  // namespace

// ---------------------------------------------------------------------------
// supertile derivation from 5-patches
// ---------------------------------------------------------------------------

SupertileDerivation derive_supertiles(const HexPatchList& red5) {
    if (red5.k != 5) throw std::invalid_argument("derive_supertiles needs 5-patches");
    const HexBall& ball = HexBall::of(5);
    std::vector<const HexPatch*> gpats;
    for (const auto& p : red5.patches)
        if (cfg_kind(p.center()) == HexKind::Gamma) gpats.push_back(&p);
    if (gpats.empty()) throw std::logic_error("no Gamma-centered 5-patches");

    auto gammas_in = [&](const HexPatch& p) {
        std::vector<std::pair<Axial, int>> out;
        for (size_t i = 0; i < p.cfg.size(); i++)
            if (cfg_kind(p.cfg[i]) == HexKind::Gamma)
                out.push_back({ball.cells[i], cfg_rot(p.cfg[i])});
        return out;
    };

    // footprint search: connected 7-cell subsets of ball(2) containing the origin
    const HexBall& b2 = HexBall::of(2);
    std::vector<std::array<Axial, 7>> candidates;
    {
        std::vector<Axial> others(b2.cells.begin() + 1, b2.cells.end());
        std::vector<int> idx(others.size());
        std::function<void(size_t, std::vector<Axial>&)> choose = [&](size_t start,
                                                                      std::vector<Axial>& cur) {
            if (cur.size() == 6) {
                // connectivity
                std::set<Axial> cs(cur.begin(), cur.end());
                cs.insert(Axial{0, 0});
                std::vector<Axial> stack{{0, 0}};
                std::set<Axial> seen{{0, 0}};
                while (!stack.empty()) {
                    Axial c = stack.back();
                    stack.pop_back();
                    for (auto d : kHexDirs) {
                        Axial n = c + d;
                        if (cs.count(n) && !seen.count(n)) { seen.insert(n); stack.push_back(n); }
                    }
                }
                if (seen.size() == 7) {
                    std::array<Axial, 7> a;
                    a[0] = Axial{0, 0};
                    for (int i = 0; i < 6; i++) a[size_t(i + 1)] = cur[size_t(i)];
                    candidates.push_back(a);
                }
                return;
            }
            for (size_t i = start; i < others.size(); i++) {
                cur.push_back(others[i]);
                choose(i + 1, cur);
                cur.pop_back();
            }
        };
        std::vector<Axial> cur;
        choose(0, cur);
    }

    auto check = [&](const std::array<Axial, 7>& R, Axial X) {
        const int SAFE = 3;
        for (const HexPatch* pp : gpats) {
            auto gs = gammas_in(*pp);
            std::map<Axial, int> claimed;
            std::map<Axial, int> xclaim;
            for (auto [g, rho] : gs) {
                for (auto rc : R) claimed[rc.rot60(rho) + g]++;
                xclaim[X.rot60(rho) + g]++;
            }
            for (auto& [c, n] : claimed)
                if (n > 1) return false;
            for (size_t i = 0; i < pp->cfg.size(); i++) {
                Axial c = ball.cells[i];
                if (c.dist() > SAFE) continue;
                int inr = claimed.count(c) ? claimed[c] : 0;
                if (inr == 1) continue;
                auto xi = xclaim.find(c);
                if (inr == 0 && xi != xclaim.end() && xi->second == 1) continue;
                return false;
            }
        }
        return true;
    };

    std::vector<std::pair<std::array<Axial, 7>, Axial>> hits;
    for (const auto& R : candidates) {
        for (auto x : b2.cells) {
            if (std::find(R.begin(), R.end(), x) != R.end()) continue;
            if (check(R, x)) hits.push_back({R, x});
        }
    }
    if (hits.size() != 1)
        throw std::logic_error("supertile footprint not unique: " + std::to_string(hits.size()));

    SupertileDerivation out;
    out.footprint = hits[0].first;
    out.extra = hits[0].second;
    const auto& R = out.footprint;
    Axial X = out.extra;

    // contents + vertex/superedge derivation
    struct Content {
        std::map<Axial, HexCfg> cells;  // footprint cells (+ extra when owned)
        std::set<std::array<Axial, 3>> vertices;
        std::vector<std::pair<Axial, int>> boundary;  // CCW half-edges of the region
        std::array<std::vector<std::pair<Axial, int>>, 6> superedges;
    };
    auto corner_id = [&](Axial c, int i) {
        std::array<Axial, 3> id{c, c + kHexDirs[i], c + kHexDirs[(i + 1) % 6]};
        std::sort(id.begin(), id.end());
        return id;
    };

    std::map<std::vector<HexCfg>, Content> contents;
    for (const HexPatch* pp : gpats) {
        auto gs = gammas_in(*pp);
        std::map<Axial, std::pair<Axial, int>> claim;
        for (auto [g, rho] : gs)
            for (auto rc : R) claim[rc.rot60(rho) + g] = {g, rho};
        for (auto [g, rho] : gs) {
            Axial xc = X.rot60(rho) + g;
            if (!claim.count(xc)) claim[xc] = {g, rho};
        }
        // center supertile cells
        std::map<Axial, HexCfg> own;
        for (auto rc : R) own[rc] = pp->cfg[size_t(ball.index.at(rc))];
        if (claim.at(X) == std::make_pair(Axial{0, 0}, 0))
            own[X] = pp->cfg[size_t(ball.index.at(X))];
        std::vector<HexCfg> key;
        for (auto& [c, v] : own) key.push_back(v);
        key.push_back(HexCfg(own.size()));

        // vertices: corners incident to the region where three claims meet
        std::set<std::array<Axial, 3>> verts;
        for (auto& [c, v] : own) {
            for (int i = 0; i < 6; i++) {
                auto id = corner_id(c, i);
                std::set<std::pair<Axial, int>> cls;
                bool all = true;
                for (auto cc : id) {
                    auto it = claim.find(cc);
                    if (it == claim.end()) { all = false; break; }
                    cls.insert(it->second);
                }
                if (all && cls.size() == 3) verts.insert(id);
            }
        }
        auto it = contents.find(key);
        if (it == contents.end()) {
            Content ct;
            ct.cells = own;
            ct.vertices = verts;
            contents[key] = ct;
        } else if (!(it->second.vertices == verts) || !(it->second.cells == own)) {
            throw std::logic_error("supertile vertex locations differ across patches");
        }
    }
    if (contents.size() != 9)
        throw std::logic_error("expected nine supertile contents, got " +
                               std::to_string(contents.size()));

    // boundary walk + vertex cuts per content
    for (auto& [key, ct] : contents) {
        if (ct.vertices.size() != 6) throw std::logic_error("supertile without 6 vertices");
        std::set<Axial> own;
        for (auto& [c, v] : ct.cells) own.insert(c);
        // directed boundary walk: half-edge (c, d) with neighbour outside; next
        // half-edge shares the corner corner_id(c, d)
        std::map<std::array<Axial, 3>, std::pair<Axial, int>> from_corner;
        for (auto c : own)
            for (int d = 0; d < 6; d++)
                if (!own.count(c + kHexDirs[d]))
                    from_corner[corner_id(c, (d + 5) % 6)] = {c, d};
        auto start = from_corner.begin()->second;
        std::vector<std::pair<Axial, int>> loop;
        auto cur = start;
        do {
            loop.push_back(cur);
            auto nxt = from_corner.find(corner_id(cur.first, cur.second));
            if (nxt == from_corner.end()) throw std::logic_error("open supertile boundary");
            cur = nxt->second;
        } while (!(cur == start));
        ct.boundary = loop;
        std::vector<size_t> cuts;
        for (size_t i = 0; i < loop.size(); i++) {
            // half-edge (c,d) starts at corner (c, d-1)
            if (ct.vertices.count(corner_id(loop[i].first, (loop[i].second + 5) % 6)))
                cuts.push_back(i);
        }
        if (cuts.size() != 6) throw std::logic_error("supertile vertices not on boundary");
        for (int a = 0; a < 6; a++) {
            size_t i0 = cuts[size_t(a)], i1 = cuts[size_t((a + 1) % 6)];
            for (size_t i = i0; i != i1; i = (i + 1) % loop.size())
                ct.superedges[size_t(a)].push_back(loop[i]);
        }
    }

    // assign supertile kinds: superedge child-label sequences must bridge to the
    // mirrored parent labels with a cyclic alignment (order-reversing)
    auto child_labels = [&](const Content& ct, const std::vector<std::pair<Axial, int>>& se) {
        std::vector<EdgeLabel> ls;
        for (auto [c, d] : se) {
            HexCfg cfgv = ct.cells.at(c);
            ls.push_back(facing_label(cfg_kind(cfgv), cfg_rot(cfgv), d));
        }
        return ls;
    };
    auto rc_of = [&](std::vector<EdgeLabel> ls) {
        std::reverse(ls.begin(), ls.end());
        for (auto& l : ls) l = l.mate();
        return ls;
    };

    std::vector<std::pair<const std::vector<HexCfg>*, const Content*>> clist;
    for (auto& [key, ct] : contents) clist.push_back({&key, &ct});

    struct Sol {
        std::map<const Content*, std::pair<HexKind, int>> assign;  // kind + alignment
    };
    std::vector<Sol> sols;
    std::map<std::vector<EdgeLabel>, EdgeLabel> seqlab;
    std::set<HexKind> used;
    Sol cursol;
    std::function<void(size_t)> bt2 = [&](size_t i) {
        if (i == clist.size()) {
            sols.push_back(cursol);
            return;
        }
        const Content* ct = clist[i].second;
        std::array<std::vector<EdgeLabel>, 6> seqs;
        for (int a = 0; a < 6; a++) seqs[size_t(a)] = child_labels(*ct, ct->superedges[size_t(a)]);
        for (HexKind kk : kAllHexKinds) {
            if (used.count(kk)) continue;
            const auto& L = marked_hexagon(kk).labels;
            for (int c = 0; c < 6; c++) {
                // parent edge e corresponds to CCW superedge position (5 - e + c) % 6
                auto saved = seqlab;
                bool ok = true;
                for (int e = 0; e < 6 && ok; e++) {
                    const auto& s = seqs[size_t(((5 - e + c) % 6 + 6) % 6)];
                    EdgeLabel lab = L[size_t(e)];
                    auto f = seqlab.find(s);
                    if (f != seqlab.end() && !(f->second == lab)) { ok = false; break; }
                    seqlab[s] = lab;
                    auto rcs = rc_of(s);
                    auto g = seqlab.find(rcs);
                    if (g != seqlab.end() && !(g->second == lab.mate())) { ok = false; break; }
                    seqlab[rcs] = lab.mate();
                }
                if (ok) {
                    used.insert(kk);
                    cursol.assign[ct] = {kk, c};
                    bt2(i + 1);
                    cursol.assign.erase(ct);
                    used.erase(kk);
                }
                seqlab = saved;
            }
        }
    };
    bt2(0);
    if (sols.empty()) throw std::logic_error("supertile kind bridge not found");
    for (size_t i = 1; i < sols.size(); i++)
        if (!(sols[i].assign == sols[0].assign))
            throw std::logic_error("supertile kind bridge ambiguous");

    // build layouts
    for (auto& [keyp, ctp] : clist) {
        const Content& ct = *ctp;
        auto [kind, c] = sols[0].assign.at(ctp);
        SupertileLayout L;
        L.kind = kind;
        std::map<Axial, int> child_idx;
        // Gamma child first
        std::vector<Axial> order;
        order.push_back(Axial{0, 0});
        for (auto& [cell, v] : ct.cells)
            if (!(cell == Axial{0, 0})) order.push_back(cell);
        for (auto cell : order) {
            HexCfg v = ct.cells.at(cell);
            child_idx[cell] = int(L.children.size());
            L.children.push_back({cfg_kind(v), cfg_rot(v), cell});
        }
        for (int e = 0; e < 6; e++) {
            const auto& se = ct.superedges[size_t(((5 - e + c) % 6 + 6) % 6)];
            for (auto [cell, d] : se) L.superedges[size_t(e)].push_back({child_idx.at(cell), d});
        }
        out.layouts[size_t(kind)] = L;
    }
    return out;
}

// ---------------------------------------------------------------------------
// combinatorial patches
// ---------------------------------------------------------------------------

EdgeLabel CombPatch::label(int n, int e) const {
    return marked_hexagon(nodes[size_t(n)].kind).labels[size_t(e)];
}

bool CombPatch::valid() const {
    for (int n = 0; n < size(); n++) {
        for (int e = 0; e < 6; e++) {
            auto [m, f] = adj[size_t(n)][size_t(e)];
            if (m < 0) continue;
            if (adj[size_t(m)][size_t(f)] != std::make_pair(n, e)) return false;
            if (!matches(label(n, e), label(m, f))) return false;
        }
    }
    return true;
}

HexEmbedding embed(const CombPatch& p) {
    HexEmbedding emb;
    emb.mirrored = p.mirrored;
    int n = p.size();
    emb.cell.assign(size_t(n), Axial{0, 0});
    emb.rot.assign(size_t(n), -1);
    if (n == 0) return emb;
    std::queue<int> q;
    emb.rot[0] = 0;
    q.push(0);
    // direction of node v's edge e
    auto dir_of = [&](int v, int e) {
        return p.mirrored ? ((5 - e + emb.rot[size_t(v)]) % 6 + 6) % 6
                          : ((e + emb.rot[size_t(v)]) % 6 + 6) % 6;
    };
    std::map<Axial, int> occupied;
    occupied[{0, 0}] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < 6; e++) {
            auto [w, f] = p.adj[size_t(v)][size_t(e)];
            if (w < 0) continue;
            int d = dir_of(v, e);
            // rot of w from the pairing equation: dir_w(f) == d + 3
            int rw = p.mirrored ? ((d + 3 - 5 + f) % 6 + 6) % 6 : ((d + 3 - f) % 6 + 6) % 6;
            Axial cw = emb.cell[size_t(v)] + kHexDirs[size_t(d)];
            if (emb.rot[size_t(w)] < 0) {
                emb.rot[size_t(w)] = rw;
                emb.cell[size_t(w)] = cw;
                auto [it, fresh] = occupied.emplace(cw, w);
                if (!fresh && it->second != w)
                    throw std::runtime_error("embed: two hexagons on one cell");
                q.push(w);
            } else {
                if (emb.rot[size_t(w)] != rw || !(emb.cell[size_t(w)] == cw))
                    throw std::runtime_error("embed: inconsistent cycle");
            }
        }
    }
    for (int v = 0; v < n; v++)
        if (emb.rot[size_t(v)] < 0) throw std::runtime_error("embed: disconnected patch");
    return emb;
}

CombPatch seed_patch(HexKind kind) {
    CombPatch p;
    p.nodes.push_back({kind});
    p.adj.push_back({std::pair{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}});
    return p;
}

CombPatch comb_from_hexpatch(const HexPatch& hp) {
    const HexBall& ball = HexBall::of(hp.k);
    CombPatch p;
    std::map<Axial, int> node_at;
    for (size_t i = 0; i < hp.cfg.size(); i++) {
        if (hp.cfg[i] == kUnsetCfg) continue;
        node_at[ball.cells[i]] = p.size();
        p.nodes.push_back({cfg_kind(hp.cfg[i])});
        p.adj.push_back({std::pair{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}});
    }
    for (size_t i = 0; i < hp.cfg.size(); i++) {
        if (hp.cfg[i] == kUnsetCfg) continue;
        int v = node_at.at(ball.cells[i]);
        int rv = cfg_rot(hp.cfg[i]);
        for (int d = 0; d < 6; d++) {
            Axial nc = ball.cells[i] + kHexDirs[size_t(d)];
            auto it = node_at.find(nc);
            if (it == node_at.end()) continue;
            int w = it->second;
            int rw = cfg_rot(hp.cfg[size_t(ball.index.at(nc))]);
            int e = ((d - rv) % 6 + 6) % 6;
            int f = ((d + 3 - rw) % 6 + 6) % 6;
            p.adj[size_t(v)][size_t(e)] = {w, f};
        }
    }
    if (!p.valid()) throw std::logic_error("comb_from_hexpatch: invalid patch");
    return p;
}

namespace {

CombPatch mirror_patch(const CombPatch& p) {
    CombPatch out;
    out.nodes = p.nodes;
    out.mirrored = !p.mirrored;
    out.adj.resize(p.adj.size());
    for (size_t n = 0; n < p.adj.size(); n++) {
        for (int e = 0; e < 6; e++) {
            auto [m, f] = p.adj[n][size_t(e)];
            out.adj[n][size_t((5 - e) % 6)] = m < 0 ? std::pair{-1, -1}
                                                    : std::pair{m, (5 - f) % 6};
        }
    }
    return out;
}

// native substitution for mirrored parents (children come out unmirrored)
CombPatch substitute_mirrored(const CombPatch& p) {
    if (!p.mirrored) throw std::logic_error("substitute_mirrored needs a mirrored patch");
    const auto& table = supertile_table();
    CombPatch out;
    out.mirrored = false;
    // child node ids per parent node
    std::vector<std::vector<int>> ids(p.nodes.size());
    for (size_t n = 0; n < p.nodes.size(); n++) {
        const SupertileLayout& L = table[size_t(p.nodes[n].kind)];
        for (const auto& ch : L.children) {
            ids[n].push_back(out.size());
            out.nodes.push_back({ch.kind});
            out.adj.push_back({std::pair{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}});
        }
    }
    auto pair_up = [&](int a, int ea, int b, int eb) {
        out.adj[size_t(a)][size_t(ea)] = {b, eb};
        out.adj[size_t(b)][size_t(eb)] = {a, ea};
    };
    // internal adjacencies
    for (size_t n = 0; n < p.nodes.size(); n++) {
        const SupertileLayout& L = table[size_t(p.nodes[n].kind)];
        std::map<Axial, int> at;
        for (size_t ci = 0; ci < L.children.size(); ci++) at[L.children[ci].at] = int(ci);
        for (size_t ci = 0; ci < L.children.size(); ci++) {
            for (int d = 0; d < 6; d++) {
                auto it = at.find(L.children[ci].at + kHexDirs[size_t(d)]);
                if (it == at.end()) continue;
                int cj = it->second;
                if (cj < int(ci)) continue;
                int e = ((d - L.children[ci].rot) % 6 + 6) % 6;
                int f = ((d + 3 - L.children[size_t(cj)].rot) % 6 + 6) % 6;
                pair_up(ids[n][ci], e, ids[n][size_t(cj)], f);
            }
        }
    }
    // stitch across parent pairings
    for (size_t n = 0; n < p.nodes.size(); n++) {
        for (int e = 0; e < 6; e++) {
            auto [m, f] = p.adj[n][size_t(e)];
            if (m < 0 || (size_t(m) < n || (size_t(m) == n && f < e))) continue;
            const SupertileLayout& Ln = table[size_t(p.nodes[n].kind)];
            const SupertileLayout& Lm = table[size_t(p.nodes[size_t(m)].kind)];
            const auto& se = Ln.superedges[size_t(e)];
            const auto& sf = Lm.superedges[size_t(f)];
            if (se.size() != sf.size())
                throw std::runtime_error("substitute: superedge path-length mismatch");
            for (size_t i = 0; i < se.size(); i++) {
                auto [ci, d1] = se[i];
                auto [cj, d2] = sf[sf.size() - 1 - i];
                int a = ids[n][size_t(ci)];
                int b = ids[size_t(m)][size_t(cj)];
                int ea = ((d1 - Ln.children[size_t(ci)].rot) % 6 + 6) % 6;
                int eb = ((d2 - Lm.children[size_t(cj)].rot) % 6 + 6) % 6;
                pair_up(a, ea, b, eb);
            }
        }
    }
    if (!out.valid()) throw std::runtime_error("substitute: matching violation after stitching");
    return out;
}

}  // namespace

CombPatch substitute(const CombPatch& p) {
    if (p.mirrored) return substitute_mirrored(p);
    return mirror_patch(substitute_mirrored(mirror_patch(p)));
}

Composition compose(const CombPatch& p0) {
    bool input_mirrored = p0.mirrored;
    const CombPatch p = input_mirrored ? mirror_patch(p0) : p0;
    // now p is unmirrored; its parent is mirrored
    HexEmbedding emb = embed(p);
    const auto& table = supertile_table();
    const auto& R = supertile_footprint();
    Axial X = supertile_extra_cell();

    std::map<Axial, int> node_at;
    for (int i = 0; i < p.size(); i++) node_at[emb.cell[size_t(i)]] = i;

    // claims
    struct Anchor { Axial at; int rot; };
    std::vector<Anchor> gammas;
    for (int i = 0; i < p.size(); i++)
        if (p.nodes[size_t(i)].kind == HexKind::Gamma)
            gammas.push_back({emb.cell[size_t(i)], emb.rot[size_t(i)]});
    std::map<Axial, int> claim;  // cell -> gamma index
    for (size_t g = 0; g < gammas.size(); g++) {
        for (auto rc : R) {
            Axial c = rc.rot60(gammas[g].rot) + gammas[g].at;
            auto [it, fresh] = claim.emplace(c, int(g));
            if (!fresh) throw std::runtime_error("compose: cell claimed by two supertiles");
        }
    }
    std::map<Axial, int> xclaim;
    for (size_t g = 0; g < gammas.size(); g++) {
        Axial c = X.rot60(gammas[g].rot) + gammas[g].at;
        if (claim.count(c)) continue;
        auto [it, fresh] = xclaim.emplace(c, int(g));
        if (!fresh) throw std::runtime_error("compose: extra cell claimed twice");
    }

    // content lookup: compare owned cells directly against each layout
    auto kind_of_content = [&](const std::map<Axial, HexCfg>& own) -> std::optional<HexKind> {
        for (HexKind kk : kAllHexKinds) {
            const auto& L = table[size_t(kk)];
            if (L.children.size() != own.size()) continue;
            bool ok = true;
            for (const auto& ch : L.children) {
                auto it = own.find(ch.at);
                if (it == own.end() || it->second != make_cfg(ch.kind, ch.rot)) { ok = false; break; }
            }
            if (ok) return kk;
        }
        return std::nullopt;
    };

    Composition out;
    out.parent.mirrored = true;
    out.node_of.assign(size_t(p.size()), -1);
    std::vector<int> parent_of_gamma(gammas.size(), -1);
    std::vector<std::vector<int>> members(gammas.size());
    for (size_t g = 0; g < gammas.size(); g++) {
        bool complete = true;
        std::map<Axial, HexCfg> own;
        for (auto rc : R) {
            Axial c = rc.rot60(gammas[g].rot) + gammas[g].at;
            auto it = node_at.find(c);
            if (it == node_at.end()) { complete = false; break; }
            own[rc] = make_cfg(p.nodes[size_t(it->second)].kind,
                               ((emb.rot[size_t(it->second)] - gammas[g].rot) % 6 + 6) % 6);
        }
        if (complete) {
            Axial xw = X.rot60(gammas[g].rot) + gammas[g].at;
            if (xclaim.count(xw) && xclaim[xw] == int(g)) {
                auto it = node_at.find(xw);
                if (it == node_at.end()) complete = false;
                else
                    own[X] = make_cfg(p.nodes[size_t(it->second)].kind,
                                      ((emb.rot[size_t(it->second)] - gammas[g].rot) % 6 + 6) % 6);
            } else if (!claim.count(xw) && !node_at.count(xw)) {
                // cannot tell whether the extra belongs: boundary
                complete = false;
            }
        }
        if (!complete) continue;
        auto kk = kind_of_content(own);
        if (!kk) throw std::runtime_error("compose: supertile content not among the nine");
        parent_of_gamma[g] = out.parent.size();
        out.parent.nodes.push_back({*kk});
        out.parent.adj.push_back({std::pair{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}});
        for (auto& [c, v] : own) {
            Axial w = c.rot60(gammas[g].rot) + gammas[g].at;
            int nd = node_at.at(w);
            out.node_of[size_t(nd)] = parent_of_gamma[g];
            members[g].push_back(nd);
        }
    }

    // parent adjacency via shared superedges: map world half-edges of each complete
    // supertile's boundary to (parent node, parent edge)
    std::map<std::pair<Axial, int>, std::pair<int, int>> half_owner;
    for (size_t g = 0; g < gammas.size(); g++) {
        if (parent_of_gamma[g] < 0) continue;
        HexKind kk = out.parent.nodes[size_t(parent_of_gamma[g])].kind;
        const auto& L = table[size_t(kk)];
        for (int e = 0; e < 6; e++) {
            for (auto [ci, d] : L.superedges[size_t(e)]) {
                Axial lc = L.children[size_t(ci)].at;
                Axial w = lc.rot60(gammas[g].rot) + gammas[g].at;
                int wd = (d + gammas[g].rot) % 6;
                half_owner[{w, wd}] = {parent_of_gamma[g], e};
            }
        }
    }
    for (const auto& [he, owner] : half_owner) {
        Axial other = he.first + kHexDirs[size_t(he.second)];
        auto it = half_owner.find({other, (he.second + 3) % 6});
        if (it == half_owner.end()) continue;
        auto [a, ea] = owner;
        auto [b, eb] = it->second;
        if (a == b) continue;
        auto& slot = out.parent.adj[size_t(a)][size_t(ea)];
        if (slot.first >= 0 && !(slot == std::make_pair(b, eb)))
            throw std::runtime_error("compose: conflicting parent adjacency");
        slot = {b, eb};
        out.parent.adj[size_t(b)][size_t(eb)] = {a, ea};
    }
    if (!out.parent.valid()) throw std::runtime_error("compose: invalid parent patch");
    if (input_mirrored) out.parent = mirror_patch(out.parent);
    return out;
}

// ---------------------------------------------------------------------------
// geometric realization
// ---------------------------------------------------------------------------

RealizedPatch realize_geometry(const CombPatch& p0) {
    const bool mirrored = p0.mirrored;
    const CombPatch p = mirrored ? mirror_patch(p0) : p0;
    RealizedPatch out;
    out.mirrored = mirrored;
    if (p.size() == 0) return out;
    (void)embed(p);  // validates consistency

    out.cluster_pose.assign(size_t(p.size()), GridPose{});
    std::vector<char> done(size_t(p.size()), 0);
    std::queue<int> q;
    done[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < 6; e++) {
            auto [w, f] = p.adj[size_t(v)][size_t(e)];
            if (w < 0) continue;
            GridPose rel = cluster_rel_pose(p.nodes[size_t(v)].kind, e, p.nodes[size_t(w)].kind, f);
            GridPose pw = compose(out.cluster_pose[size_t(v)], rel);
            if (!done[size_t(w)]) {
                out.cluster_pose[size_t(w)] = pw;
                done[size_t(w)] = 1;
                q.push(w);
            } else if (!(out.cluster_pose[size_t(w)] == pw)) {
                throw std::runtime_error("realize_geometry: inconsistent cluster poses");
            }
        }
    }
    // collect tiles; exact disjointness via kite cells
    std::unordered_set<CellKey> used;
    for (int v = 0; v < p.size(); v++) {
        const auto& base = cluster_tiles(p.nodes[size_t(v)].kind);
        for (const auto& t : base) {
            GridTile w{t.kind, compose(out.cluster_pose[size_t(v)], t.pose)};
            if (mirrored) {
                GridPose refl{0, Axial{0, 0}, true};
                w.pose = compose(refl, w.pose);
            }
            for (auto c : w.cells()) {
                CellKey key = (CellKey(c.q + 4096) << 26) | (CellKey(c.r + 4096) << 8) | CellKey(c.k);
                if (!used.insert(key).second)
                    throw std::runtime_error("realize_geometry: clusters overlap");
            }
            out.tiles.push_back(w);
            out.cluster_of.push_back(v);
        }
    }
    return out;
}

Patch RealizedPatch::as_patch() const {
    Patch p;
    for (const auto& t : tiles) p.tiles.push_back(t.placed());
    return p;
}

// ---------------------------------------------------------------------------
// non-periodicity
// ---------------------------------------------------------------------------

namespace {

double axial_norm(Axial t) {
    Coord4 v = hex_center(t);
    double x = v.fx(), y = v.fy();
    return std::sqrt(x * x + y * y);
}

std::set<Axial> candidate_shifts(const std::vector<LatticeRec>& recs, double max_shift) {
    std::map<int, std::vector<Axial>> by_type;
    for (const auto& r : recs) by_type[r.type].push_back(r.pos);
    std::set<Axial> cands;
    for (auto& [ty, ps] : by_type) {
        for (size_t i = 0; i < ps.size(); i++)
            for (size_t j = 0; j < ps.size(); j++) {
                if (i == j) continue;
                Axial t = ps[j] - ps[i];
                if (axial_norm(t) <= max_shift) cands.insert(t);
            }
    }
    cands.erase(Axial{0, 0});
    return cands;
}

}  // namespace

bool check_nonperiodic(const std::vector<LatticeRec>& recs, double max_shift) {
    if (recs.empty()) return true;
    std::set<LatticeRec> rset(recs.begin(), recs.end());
    std::set<Axial> positions;
    for (const auto& r : recs) positions.insert(r.pos);
    for (Axial t : candidate_shifts(recs, max_shift)) {
        bool ok = true;
        int mapped = 0;
        for (const auto& r : recs) {
            Axial np = r.pos + t;
            if (!positions.count(np)) continue;  // shifted outside the occupied domain
            if (rset.count(LatticeRec{r.type, np})) mapped++;
            else { ok = false; break; }
        }
        if (ok && mapped > 0) return false;  // translational self-map found
    }
    return true;
}

bool check_nonperiodic(const std::vector<GridTile>& tiles, double max_shift) {
    if (tiles.empty()) return true;
    std::vector<LatticeRec> recs = records_of(tiles);
    std::set<LatticeRec> rset(recs.begin(), recs.end());
    std::set<KiteCell> covered;
    for (const auto& t : tiles)
        for (auto c : t.cells()) covered.insert(c);
    for (Axial t : candidate_shifts(recs, max_shift)) {
        bool ok = true;
        int mapped = 0;
        for (size_t i = 0; i < tiles.size() && ok; i++) {
            bool inside = true;
            for (auto c : tiles[i].cells()) {
                KiteCell s{std::int16_t(c.q + t.q), std::int16_t(c.r + t.r), c.k};
                if (!covered.count(s)) { inside = false; break; }
            }
            if (!inside) continue;
            if (rset.count(LatticeRec{recs[i].type, recs[i].pos + t})) mapped++;
            else ok = false;
        }
        if (ok && mapped > 0) return false;
    }
    return true;
}

std::vector<LatticeRec> records_of(const std::vector<GridTile>& tiles) {
    std::vector<LatticeRec> out;
    for (const auto& t : tiles) {
        int type = (int(t.kind) * 6 + t.pose.rot6) * 2 + (t.pose.reflect ? 1 : 0);
        out.push_back({type, t.pose.t});
    }
    return out;
}

std::vector<LatticeRec> records_of(const CombPatch& p) {
    HexEmbedding emb = embed(p);
    std::vector<LatticeRec> out;
    for (int i = 0; i < p.size(); i++) {
        int type = int(p.nodes[size_t(i)].kind) * 6 + emb.rot[size_t(i)];
        out.push_back({type, emb.cell[size_t(i)]});
    }
    return out;
}

}  // namespace spectre
