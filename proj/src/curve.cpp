#include "spectre/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectre {

int orient2e(const Point2E& a, const Point2E& b, const Point2E& c) {
    Surd v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

namespace {

bool in_open_segment2e(const Point2E& v, const Point2E& a, const Point2E& b) {
    if (v == a || v == b) return false;
    if (orient2e(a, b, v) != 0) return false;
    Surd d1 = (v.x - a.x) * (b.x - a.x) + (v.y - a.y) * (b.y - a.y);
    Surd d2 = (v.x - b.x) * (a.x - b.x) + (v.y - b.y) * (a.y - b.y);
    return d1.sign() > 0 && d2.sign() > 0;
}

}  // namespace

bool segments_cross_or_overlap(const Point2E& a, const Point2E& b, const Point2E& c,
                               const Point2E& d, bool endpoints_shared_ok) {
    int o1 = orient2e(a, b, c), o2 = orient2e(a, b, d);
    int o3 = orient2e(c, d, a), o4 = orient2e(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) return true;
    if (o1 == 0 && o2 == 0) {
        if (in_open_segment2e(c, a, b) || in_open_segment2e(d, a, b) ||
            in_open_segment2e(a, c, d) || in_open_segment2e(b, c, d))
            return true;
        if ((a == c && b == d) || (a == d && b == c)) return true;
        return false;
    }
    // touching at interior points counts as intersection for simplicity checks
    if (in_open_segment2e(c, a, b) || in_open_segment2e(d, a, b) ||
        in_open_segment2e(a, c, d) || in_open_segment2e(b, c, d))
        return true;
    if (!endpoints_shared_ok && (a == c || a == d || b == c || b == d)) return true;
    return false;
}

Point2E rot30_point(const Point2E& p, int k) {
    k = ((k % 12) + 12) % 12;
    // cos30k, sin30k as Surds
    static const auto cs = [] {
        std::array<std::pair<Surd, Surd>, 12> t;
        for (int i = 0; i < 12; i++) {
            Coord4 u = unit(i);
            t[i] = {u.x(), u.y()};
        }
        return t;
    }();
    const Surd &c = cs[k].first, &s = cs[k].second;
    return {p.x * c - p.y * s, p.x * s + p.y * c};
}

Point2E reflect_x_point(const Point2E& p) { return {p.x, -p.y}; }

CurveSpec CurveSpec::from_rationals(
    const std::vector<std::pair<std::pair<i64, i64>, std::pair<i64, i64>>>& pts) {
    CurveSpec c;
    for (const auto& [xs, ys] : pts)
        c.samples.push_back({Surd(xs.first, 0, xs.second), Surd(ys.first, 0, ys.second)});
    return c;
}

bool CurveSpec::endpoints_ok() const {
    if (samples.size() < 2) return false;
    return samples.front() == Point2E{Surd(0), Surd(0)} && samples.back() == Point2E{Surd(1), Surd(0)};
}

bool CurveSpec::is_straight() const {
    for (const auto& p : samples)
        if (p.y.sign() != 0) return false;
    return true;
}

bool CurveSpec::is_simple() const {
    size_t n = samples.size();
    if (n < 2) return false;
    for (size_t i = 0; i + 1 < n; i++)
        if (samples[i] == samples[i + 1]) return false;
    for (size_t i = 0; i + 1 < n; i++) {
        for (size_t j = i + 1; j + 1 < n; j++) {
            bool adjacent = j == i + 1;
            if (segments_cross_or_overlap(samples[i], samples[i + 1], samples[j], samples[j + 1],
                                          adjacent))
                return false;
        }
    }
    return true;
}

bool CurveSpec::is_s_curve() const {
    // symmetric under 180-degree rotation about (1/2, 0)
    size_t n = samples.size();
    for (size_t i = 0; i < n; i++) {
        Point2E r{Surd(1) - samples[n - 1 - i].x, -samples[n - 1 - i].y};
        if (!(r == samples[i])) return false;
    }
    return true;
}

CurveSpec CurveSpec::reversed_flipped() const {
    CurveSpec out;
    size_t n = samples.size();
    out.samples.reserve(n);
    for (size_t i = 0; i < n; i++)
        out.samples.push_back({Surd(1) - samples[n - 1 - i].x, -samples[n - 1 - i].y});
    return out;
}

const CurveSpec& default_s_curve() {
    static const CurveSpec c = CurveSpec::from_rationals({
        {{0, 1}, {0, 1}}, {{1, 4}, {1, 8}}, {{1, 2}, {0, 1}}, {{3, 4}, {-1, 8}}, {{1, 1}, {0, 1}},
    });
    return c;
}

const CurveSpec& default_asymmetric_curve() {
    static const CurveSpec c = CurveSpec::from_rationals({
        {{0, 1}, {0, 1}}, {{1, 4}, {1, 6}}, {{5, 8}, {1, 12}}, {{1, 1}, {0, 1}},
    });
    return c;
}

namespace {

Point2E c4_point(const Coord4& v) { return {v.x(), v.y()}; }

// fit curve samples to the edge from p to q (unit length), optionally flipped
std::vector<Point2E> fit_piece(const CurveSpec& curve, const Coord4& p, const Coord4& q, bool flip) {
    const CurveSpec src = flip ? curve.reversed_flipped() : curve;
    Coord4 d = q - p;
    int dir = -1;
    for (int k = 0; k < 12; k++)
        if (d == unit(k)) { dir = k; break; }
    if (dir < 0) throw std::invalid_argument("fit_piece: edge is not a unit lattice edge");
    std::vector<Point2E> out;
    out.reserve(src.samples.size());
    Point2E base = c4_point(p);
    for (const auto& s : src.samples) out.push_back(base + rot30_point(s, dir));
    return out;
}

}  // namespace

std::vector<Point2E> SpectreBoundary::outline() const {
    std::vector<Point2E> out;
    for (const auto& piece : pieces)
        for (size_t i = 0; i + 1 < piece.size(); i++) out.push_back(piece[i]);
    return out;
}

SpectreBoundary apply_edge_curve(const CurveSpec& curve, CurveScheme scheme) {
    if (!curve.endpoints_ok()) throw std::invalid_argument("curve must run from (0,0) to (1,0)");
    if (curve.is_straight()) throw std::invalid_argument("curve must be non-straight");
    if (!curve.is_simple()) throw std::invalid_argument("curve must be simple");
    if (scheme == CurveScheme::SCurve && !curve.is_s_curve())
        throw std::invalid_argument("s-curve scheme requires an s-curve");

    const Polygon& t11 = tile11_polygon();
    size_t n = t11.size();
    SpectreBoundary b;
    b.scheme = scheme;
    b.pieces.reserve(n);
    for (size_t i = 0; i < n; i++) {
        // alternating: copies on consecutive edges related by rotation about the
        // shared vertex, i.e. every second edge carries the flipped curve. for an
        // s-curve the flip is a no-op, so the schemes agree there.
        bool flip = scheme == CurveScheme::Alternating && (i % 2 == 1);
        b.pieces.push_back(fit_piece(curve, t11[i], t11[(i + 1) % n], flip));
    }
    // verify the closed boundary is simple (exact, on samples)
    std::vector<Point2E> pts = b.outline();
    size_t m = pts.size();
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (segments_cross_or_overlap(pts[i], pts[(i + 1) % m], pts[j], pts[(j + 1) % m],
                                          adjacent))
                throw std::invalid_argument("curve substitution self-intersects: not a Spectre");
        }
    }
    return b;
}

bool MatingReport::all_blocked() const { return coincide_count() == 0; }

int MatingReport::coincide_count() const {
    int c = 0;
    for (const auto& row : entries)
        for (auto e : row)
            if (e == Entry::Coincide) c++;
    return c;
}

MatingReport check_reflection_blocking(const CurveSpec& curve, CurveScheme scheme) {
    // note: the straight-control curve is allowed here on purpose; it reports
    // Coincide entries. apply_edge_curve() is the constructor that rejects it.
    const Polygon& t11 = tile11_polygon();
    size_t n = t11.size();

    auto piece_local = [&](size_t i) {
        bool flip = scheme == CurveScheme::Alternating && (i % 2 == 1);
        return flip ? curve.reversed_flipped() : curve;
    };

    // vertex angle classes alternate (multiples of 90 at even indices); a mating
    // aligns vertex i with reflected-vertex j+1, so i + j must be odd
    MatingReport rep{};
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if ((i + j) % 2 == 0) {
                rep.entries[i][j] = MatingReport::Entry::BlockedAngleClass;
                continue;
            }
            // unreflected piece i in edge-local frame: piece_local(i) from (0,0) to (1,0).
            // reflected tile's piece j, traversed against piece i: the reflected tile's
            // boundary carries the x-reflection of piece j; in the shared mating frame
            // the reflected piece must be rotated 180 about the edge midpoint.
            CurveSpec mine = piece_local(i);
            CurveSpec theirs_refl = piece_local(j);
            std::vector<Point2E> mirrored;
            for (const auto& p : theirs_refl.samples) mirrored.push_back(reflect_x_point(p));
            // mate: their curve runs from (1,0) to (0,0) along the same edge:
            // rotate 180 about (1/2, 0)
            std::vector<Point2E> mated;
            for (const auto& p : mirrored) mated.push_back({Surd(1) - p.x, -p.y});
            std::vector<Point2E> a = mine.samples, b = mated;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            rep.entries[i][j] =
                a == b ? MatingReport::Entry::Coincide : MatingReport::Entry::BlockedShape;
        }
    }
    return rep;
}

}  // namespace spectre
