#include "spectre/tiles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace spectre {

std::string to_string(TileKind k) {
    switch (k) {
        case TileKind::Tile11: return "tile11";
        case TileKind::Hat: return "hat";
        case TileKind::Turtle: return "turtle";
    }
    return "?";
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {

// step vector of length (p + q*sqrt3) in direction k; integer because
// sqrt3*u(k) = u(k-1) + u(k+1)
Coord4 step(int k, const Surd& len) {
    if (len.den != 1) throw std::invalid_argument("tile edge length must have denominator 1");
    return len.p * unit(k) + len.q * sqrt3_unit(k);
}

}  // namespace

TileAB build_tile_ab(const Surd& a, const Surd& b) {
    if (a.sign() < 0 || b.sign() < 0) throw std::invalid_argument("tile lengths must be >= 0");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("tile lengths cannot both be 0");
    TileAB t{a, b, {}, {}};
    Coord4 p{};
    // one vertex at the start of every nonzero edge; zero-length edges collapse.
    // the 180-degree vertex between edges 13 and 0 is the anchor at the origin.
    for (int i = 0; i < kWordLen; i++) {
        const Surd& len = kWordTokenA[i] ? a : b;
        Coord4 s = step(kWordDirs[i], len);
        if (!s.is_zero()) {
            t.poly.verts.push_back(p);
            t.vert_edge.push_back(i);
        }
        p = p + s;
    }
    if (!(p == Coord4{})) throw std::logic_error("tile word does not close");
    if (t.poly.area().sign() <= 0) throw std::logic_error("tile polygon not CCW");
    return t;
}

const Polygon& tile11_polygon() {
    static const Polygon p = build_tile_ab(Surd(1), Surd(1)).poly;
    return p;
}
const Polygon& hat_polygon() {
    static const Polygon p = build_tile_ab(Surd(1), Surd(0, 1)).poly;
    return p;
}
const Polygon& turtle_polygon() {
    static const Polygon p = build_tile_ab(Surd(0, 1), Surd(1)).poly;
    return p;
}

const Polygon& shape_polygon(TileKind k) {
    switch (k) {
        case TileKind::Tile11: return tile11_polygon();
        case TileKind::Hat: return hat_polygon();
        case TileKind::Turtle: return turtle_polygon();
    }
    return tile11_polygon();
}

bool operator<(const PlacedTile& s, const PlacedTile& t) {
    if (s.kind != t.kind) return int(s.kind) < int(t.kind);
    if (s.pose.rot != t.pose.rot) return s.pose.rot < t.pose.rot;
    if (s.pose.reflect != t.pose.reflect) return !s.pose.reflect;
    return s.pose.trans < t.pose.trans;
}

Parity classify_parity(const PlacedTile& t) {
    // collinear pair at direction 0 in the word frame; reflection fixes the
    // direction-0 family, rotation by 30k shifts it by k
    return t.pose.rot % 2 == 0 ? Parity::Even : Parity::Odd;
}

namespace {

struct BBox {
    Surd xmin, xmax, ymin, ymax;
    static BBox of(const Polygon& p) {
        BBox b{p[0].x(), p[0].x(), p[0].y(), p[0].y()};
        for (const auto& v : p.verts) {
            Surd x = v.x(), y = v.y();
            if (x < b.xmin) b.xmin = x;
            if (b.xmax < x) b.xmax = x;
            if (y < b.ymin) b.ymin = y;
            if (b.ymax < y) b.ymax = y;
        }
        return b;
    }
    bool overlaps(const BBox& o) const {
        return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
    }
};

}  // namespace

bool Patch::interior_disjoint() const {
    std::vector<Polygon> polys;
    polys.reserve(tiles.size());
    for (const auto& t : tiles) polys.push_back(t.polygon());
    std::vector<BBox> boxes;
    boxes.reserve(polys.size());
    for (const auto& p : polys) boxes.push_back(BBox::of(p));
    std::vector<std::vector<std::array<Coord4, 3>>> tris(polys.size());
    // sweep by xmin to keep the pair loop near-linear
    std::vector<size_t> order(polys.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return boxes[i].xmin < boxes[j].xmin; });
    for (size_t oi = 0; oi < order.size(); oi++) {
        size_t i = order[oi];
        for (size_t oj = oi + 1; oj < order.size(); oj++) {
            size_t j = order[oj];
            if (boxes[i].xmax < boxes[j].xmin) break;
            if (!boxes[i].overlaps(boxes[j])) continue;
            if (tris[i].empty()) tris[i] = polys[i].triangulate();
            if (tris[j].empty()) tris[j] = polys[j].triangulate();
            for (const auto& a : tris[i]) {
                for (const auto& b : tris[j]) {
                    auto separated = [](const std::array<Coord4, 3>& ta,
                                        const std::array<Coord4, 3>& tb) {
                        for (int e = 0; e < 3; e++) {
                            bool out = true;
                            for (int v = 0; v < 3; v++)
                                if (orient(ta[e], ta[(e + 1) % 3], tb[v]) > 0) { out = false; break; }
                            if (out) return true;
                        }
                        return false;
                    };
                    if (!separated(a, b) && !separated(b, a)) return false;
                }
            }
        }
    }
    return true;
}

bool Patch::vertex_to_vertex() const {
    std::vector<Polygon> polys;
    for (const auto& t : tiles) polys.push_back(t.polygon());
    std::vector<BBox> boxes;
    for (const auto& p : polys) boxes.push_back(BBox::of(p));
    for (size_t i = 0; i < polys.size(); i++) {
        for (size_t j = 0; j < polys.size(); j++) {
            if (i == j || !boxes[i].overlaps(boxes[j])) continue;
            for (const auto& v : polys[i].verts) {
                size_t n = polys[j].size();
                for (size_t e = 0; e < n; e++) {
                    if (point_in_open_segment(v, polys[j][e], polys[j][(e + 1) % n])) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Surd> Patch::straight_run_lengths() const {
    // group all tile edges by carrier line (direction class mod 6 + exact offset),
    // merge touching collinear edges into maximal runs
    struct LineKey {
        int dir6;
        Surd off;  // cross(p, u(dir)) for a point p on the line
        bool operator<(const LineKey& o) const {
            if (dir6 != o.dir6) return dir6 < o.dir6;
            return off < o.off;
        }
    };
    std::map<LineKey, std::vector<std::pair<Surd, Surd>>> lines;  // intervals along u(dir)
    for (const auto& t : tiles) {
        Polygon p = t.polygon();
        size_t n = p.size();
        for (size_t i = 0; i < n; i++) {
            const Coord4 &a = p[i], &b = p[(i + 1) % n];
            Coord4 d = b - a;
            int dir = -1;
            for (int k = 0; k < 12 && dir < 0; k++) {
                Cross c = cross(d, unit(k));
                if (c.sign() == 0) {
                    // parallel to u(k); orient along u(k % 6)
                    dir = k % 6;
                }
            }
            if (dir < 0) continue;  // not an axis edge (curved decorations never reach here)
            Cross off = cross(a, unit(dir));
            auto dot_along = [&](const Coord4& v) {
                // projection of v on u(dir): dot value as Surd
                i64 vpx = 2 * v.c[0] + v.c[2], vqx = v.c[1];
                i64 vpy = v.c[1] + 2 * v.c[3], vqy = v.c[2];
                Coord4 u = unit(dir);
                i64 upx = 2 * u.c[0] + u.c[2], uqx = u.c[1];
                i64 upy = u.c[1] + 2 * u.c[3], uqy = u.c[2];
                i64 pp = vpx * upx + 3 * vqx * uqx + vpy * upy + 3 * vqy * uqy;
                i64 qq = vpx * uqx + vqx * upx + vpy * uqy + vqy * upy;
                return Surd(pp, qq, 4);
            };
            Surd ta = dot_along(a), tb = dot_along(b);
            if (tb < ta) std::swap(ta, tb);
            lines[LineKey{dir, Surd(off.p, off.q, 4)}].push_back({ta, tb});
        }
    }
    std::vector<Surd> runs;
    for (auto& [key, ivs] : lines) {
        std::sort(ivs.begin(), ivs.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
        Surd lo = ivs[0].first, hi = ivs[0].second;
        for (size_t i = 1; i < ivs.size(); i++) {
            if (ivs[i].first <= hi) {
                if (hi < ivs[i].second) hi = ivs[i].second;
            } else {
                runs.push_back(hi - lo);
                lo = ivs[i].first; hi = ivs[i].second;
            }
        }
        runs.push_back(hi - lo);
    }
    return runs;
}

void Patch::sort_canonical() { std::sort(tiles.begin(), tiles.end()); }

namespace {

TileKind kind_of_lengths(const Surd& a, const Surd& b) {
    Surd one(1), s3(0, 1);
    if (a == one && b == one) return TileKind::Tile11;
    if (a == one && b == s3) return TileKind::Hat;
    if (a == s3 && b == one) return TileKind::Turtle;
    throw std::invalid_argument("resize_edges: resulting tile outside {tile11, hat, turtle}");
}

std::pair<Surd, Surd> lengths_of_kind(TileKind k) {
    switch (k) {
        case TileKind::Tile11: return {Surd(1), Surd(1)};
        case TileKind::Hat: return {Surd(1), Surd(0, 1)};
        case TileKind::Turtle: return {Surd(0, 1), Surd(1)};
    }
    return {Surd(1), Surd(1)};
}

}  // namespace

namespace {

// posed vertices in word order (no orientation-normalizing reversal), so vertex
// indices correspond across the resize
std::vector<Coord4> posed_verts(const Polygon& shape, const Isometry& pose) {
    std::vector<Coord4> out;
    out.reserve(shape.size());
    for (const auto& v : shape.verts) out.push_back(pose(v));
    return out;
}

}  // namespace

Patch resize_edges(const Patch& patch, Parity family, const Surd& new_len) {
    if (patch.tiles.empty()) return {};
    size_t n = patch.tiles.size();

    // old geometry + edge identification
    std::vector<std::vector<Coord4>> oldp(n);
    for (size_t i = 0; i < n; i++)
        oldp[i] = posed_verts(shape_polygon(patch.tiles[i].kind), patch.tiles[i].pose);
    std::map<std::pair<Coord4, Coord4>, std::vector<std::pair<size_t, size_t>>> edges;
    for (size_t i = 0; i < n; i++) {
        size_t m = oldp[i].size();
        for (size_t e = 0; e < m; e++) {
            Coord4 a = oldp[i][e], b = oldp[i][(e + 1) % m];
            auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            edges[key].push_back({i, e});
        }
    }

    // new shapes per tile
    std::vector<TileAB> newshape(n);
    std::vector<TileKind> newkind(n);
    for (size_t i = 0; i < n; i++) {
        const PlacedTile& t = patch.tiles[i];
        auto [a, b] = lengths_of_kind(t.kind);
        // token A edges sit at direction parity (rot % 2)
        bool a_in_family = (t.pose.rot % 2 == 0) == (family == Parity::Even);
        Surd a2 = a_in_family ? new_len : a;
        Surd b2 = a_in_family ? b : new_len;
        newkind[i] = kind_of_lengths(a2, b2);
        newshape[i] = build_tile_ab(a2, b2);
        if (newshape[i].poly.size() != oldp[i].size())
            throw std::runtime_error("resize_edges: vertex count changed");
    }

    // walk: assign new anchors so shared edges stay glued
    std::vector<std::optional<Coord4>> anchor(n);
    auto new_local = [&](size_t i, size_t vi) {
        Isometry g = patch.tiles[i].pose;
        g.trans = Coord4{};
        return g(newshape[i].poly.verts[vi]);
    };
    anchor[0] = patch.tiles[0].pose.trans;
    std::queue<size_t> bfs;
    bfs.push(0);
    size_t visited = 1;
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!bfs.empty()) {
        size_t i = bfs.front();
        bfs.pop();
        size_t m = oldp[i].size();
        for (size_t e = 0; e < m; e++) {
            Coord4 a = oldp[i][e], b = oldp[i][(e + 1) % m];
            auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            for (auto [j, f] : edges[key]) {
                if (j == i) continue;
                size_t mj = oldp[j].size();
                // vertex correspondence: tile j traverses the shared edge oppositely
                size_t vj_for_a = (oldp[j][f] == a) ? f : (f + 1) % mj;
                Coord4 world_a_new = *anchor[i] + new_local(i, e);
                Coord4 aj = world_a_new - new_local(j, vj_for_a);
                if (!seen[j]) {
                    anchor[j] = aj;
                    seen[j] = true;
                    visited++;
                    bfs.push(j);
                } else if (*anchor[j] != aj) {
                    throw std::runtime_error("resize_edges: inconsistent cycle in adjacency walk");
                }
                // second endpoint must also match
                size_t vj_for_b = (vj_for_a == f) ? (f + 1) % mj : f;
                Coord4 world_b_new = *anchor[i] + new_local(i, (e + 1) % m);
                if (*anchor[j] + new_local(j, vj_for_b) != world_b_new)
                    throw std::runtime_error("resize_edges: shared edge endpoints diverge");
            }
        }
    }
    if (visited != n) throw std::runtime_error("resize_edges: disconnected patch");

    Patch out;
    out.tiles.reserve(n);
    for (size_t i = 0; i < n; i++) {
        PlacedTile t;
        t.kind = newkind[i];
        t.pose = patch.tiles[i].pose;
        t.pose.trans = *anchor[i];
        out.tiles.push_back(t);
    }
    for (size_t i = 0; i < n; i++) {
        if (!out.tiles[i].polygon().simple())
            throw std::runtime_error("resize_edges: tile boundary self-intersects");
    }
    return out;
}

}  // namespace spectre
