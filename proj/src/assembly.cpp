#include "spectre/assembly.hpp"

#include <map>
#include <stdexcept>

namespace spectre {

#include "tables/assembly_table.inc"

const AssemblyTables& assembly_tables() {
    static const AssemblyTables t = [] {
        if (!kAssemblyValid)
            throw std::logic_error("assembly tables not derived; run tools/derive_tables");
        AssemblyTables a;
        for (int i = 0; i < 4; i++) a.base_keypoints[size_t(i)] = kBaseKeypoints[i];
        a.mystic_second.rot = kMysticSecond[0];
        a.mystic_second.reflect = false;
        a.mystic_second.trans = Coord4{kMysticSecond[1], kMysticSecond[2], kMysticSecond[3],
                                       kMysticSecond[4]};
        for (int i = 0; i < 4; i++)
            a.mystic_keypoints[size_t(i)] = {kMysticKeypoints[i][0], kMysticKeypoints[i][1]};
        auto rule_of = [](const int steps[][4], int n, const int exports[][2]) {
            ClusterRule r;
            for (int i = 0; i < n; i++)
                r.steps.push_back({UnitKind(steps[i][0]), steps[i][1], steps[i][2], steps[i][3]});
            for (int i = 0; i < 4; i++) r.exports[size_t(i)] = {exports[i][0], exports[i][1]};
            return r;
        };
        a.spectre_cluster = rule_of(kSpectreClusterSteps, 8, kSpectreClusterExports);
        a.mystic_cluster = rule_of(kMysticClusterSteps, 7, kMysticClusterExports);
        return a;
    }();
    return t;
}

KeyPoints initial_keypoints() {
    const auto& t = assembly_tables();
    const Polygon& s = tile11_polygon();
    KeyPoints k;
    for (int i = 0; i < 4; i++) k.pts[size_t(i)] = s[size_t(t.base_keypoints[size_t(i)])];
    return k;
}

namespace {

AssembledUnit base_unit(UnitKind kind) {
    const auto& t = assembly_tables();
    AssembledUnit u;
    u.kind = kind;
    u.level = 0;
    PlacedTile first;
    first.kind = TileKind::Tile11;
    u.patch.tiles.push_back(first);
    u.mystic_of.push_back(0);
    if (kind == UnitKind::Mystic) {
        PlacedTile second;
        second.kind = TileKind::Tile11;
        second.pose = t.mystic_second;
        u.patch.tiles.push_back(second);
        u.mystic_of.push_back(1);
    }
    KeyPoints base = initial_keypoints();
    if (kind == UnitKind::Spectre) {
        u.keypoints = base;
    } else {
        for (int i = 0; i < 4; i++) {
            auto [which, kp] = t.mystic_keypoints[size_t(i)];
            Coord4 local = base.pts[size_t(kp)];
            u.keypoints.pts[size_t(i)] = which == 0 ? local : t.mystic_second(local);
        }
    }
    return u;
}

AssembledUnit transformed(const AssembledUnit& u, const Isometry& g) {
    AssembledUnit out;
    out.kind = u.kind;
    out.level = u.level;
    out.mystic_of = u.mystic_of;
    for (const auto& t : u.patch.tiles) {
        PlacedTile p = t;
        p.pose = compose(g, t.pose);
        out.patch.tiles.push_back(p);
    }
    for (int i = 0; i < 4; i++) out.keypoints.pts[size_t(i)] = g(u.keypoints.pts[size_t(i)]);
    return out;
}

AssembledUnit reflected(const AssembledUnit& u) {
    Isometry m;
    m.reflect = true;
    return transformed(u, m);
}

}  // namespace

AssembledUnit assemble_cluster(UnitKind kind, int child_level) {
    const auto& t = assembly_tables();
    const ClusterRule& rule = kind == UnitKind::Spectre ? t.spectre_cluster : t.mystic_cluster;

    // children are reflected copies of the one-level-down units
    AssembledUnit child_s = reflected(iterate(child_level, UnitKind::Spectre));
    AssembledUnit child_m = reflected(iterate(child_level, UnitKind::Mystic));

    AssembledUnit out;
    out.kind = kind;
    out.level = child_level + 1;
    std::vector<AssembledUnit> placed;
    for (size_t i = 0; i < rule.steps.size(); i++) {
        const auto& st = rule.steps[i];
        const AssembledUnit& proto = st.kind == UnitKind::Spectre ? child_s : child_m;
        if (i == 0) {
            placed.push_back(proto);
        } else {
            const AssembledUnit& prev = placed.back();
            Isometry g = Isometry::rotation(st.drot);
            // previous unit pose rotation is already baked into its geometry; the
            // step rotation is relative to the predecessor's frame
            // rotate so the child has rotation (prev rotation + drot)
            // implemented by rotating the prototype and translating the key point
            Isometry pr;  // accumulated rotation of prev relative to proto frame
            // track rotation via the first tile's pose
            int prev_rot = prev.patch.tiles[0].pose.rot;
            int proto_rot = proto.patch.tiles[0].pose.rot;
            int rot = ((prev_rot - proto_rot + st.drot) % 12 + 12) % 12;
            (void)pr;
            g = Isometry::rotation(rot);
            Coord4 target = prev.keypoints.pts[size_t(st.kp_prev)];
            Coord4 moved = g(proto.keypoints.pts[size_t(st.kp_self)]);
            g.trans = target - moved;
            placed.push_back(transformed(proto, g));
        }
    }
    // closed chain: each unit shares exactly two key points with its neighbours;
    // verify the wrap-around pair as a consistency check
    {
        const AssembledUnit& last = placed.back();
        const AssembledUnit& first = placed.front();
        int shared = 0;
        for (const auto& a : last.keypoints.pts)
            for (const auto& b : first.keypoints.pts)
                if (a == b) shared++;
        if (shared < 1) throw std::runtime_error("assemble_cluster: chain does not close");
    }
    for (const auto& u : placed) {
        for (size_t i = 0; i < u.patch.tiles.size(); i++) {
            out.patch.tiles.push_back(u.patch.tiles[i]);
            out.mystic_of.push_back(u.mystic_of[i]);
        }
    }
    for (int i = 0; i < 4; i++) {
        auto [unit, kp] = rule.exports[size_t(i)];
        out.keypoints.pts[size_t(i)] = placed[size_t(unit)].keypoints.pts[size_t(kp)];
    }
    return out;
}

AssembledUnit iterate(int levels, UnitKind seed) {
    if (levels < 0) throw std::invalid_argument("iterate: negative level");
    // memoized by (level, kind): geometry is deterministic
    static std::map<std::pair<int, int>, AssembledUnit> cache;
    auto key = std::make_pair(levels, int(seed));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    AssembledUnit u = levels == 0 ? base_unit(seed) : assemble_cluster(seed, levels - 1);
    return cache.emplace(key, std::move(u)).first->second;
}

double AssemblyStats::even_odd_ratio() const {
    return odd_tiles == 0 ? 0.0 : double(even_tiles) / double(odd_tiles);
}

AssemblyStats stats(const AssembledUnit& u) {
    AssemblyStats s;
    s.total_area = Surd(0);
    i64 mystic_tiles = 0;
    for (size_t i = 0; i < u.patch.tiles.size(); i++) {
        const auto& t = u.patch.tiles[i];
        if (classify_parity(t) == Parity::Even) s.even_tiles++;
        else s.odd_tiles++;
        if (u.mystic_of[i]) mystic_tiles++;
        s.total_area = s.total_area + shape_polygon(t.kind).area();
    }
    s.mystics = mystic_tiles;  // one flagged (odd) spectre per mystic
    s.spectres = i64(u.patch.tiles.size()) - 2 * mystic_tiles;
    return s;
}

std::array<i64, 2> unit_counts(int level, UnitKind seed) {
    std::array<i64, 2> v = seed == UnitKind::Spectre ? std::array<i64, 2>{1, 0}
                                                     : std::array<i64, 2>{0, 1};
    SubstMatrix m;
    for (int i = 0; i < level; i++) v = m.apply(v);
    return v;
}

std::vector<double> even_odd_ratio_sequence(int max_level, UnitKind seed) {
    std::vector<double> out;
    for (int n = 0; n <= max_level; n++) {
        auto [s, m] = unit_counts(n, seed);
        i64 odd = m, even = s + m;
        out.push_back(odd == 0 ? 0.0 : double(even) / double(odd));
    }
    return out;
}

}  // namespace spectre
