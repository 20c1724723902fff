#pragma once

// Exact arithmetic for the 12-fold tiling world. All geometry reduces to integer
// computations on values of the form (p + q*sqrt(D))/den.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace spectre {

using i64 = std::int64_t;
using i128 = __int128;

// (p + q*sqrt(D)) / den, normalized so den > 0 and gcd(p,q,den) == 1.
template <int D>
struct SurdT {
    i64 p = 0, q = 0, den = 1;

    constexpr SurdT() = default;
    SurdT(i64 p_, i64 q_ = 0, i64 den_ = 1) : p(p_), q(q_), den(den_) { normalize(); }

    static SurdT root() { return SurdT(0, 1, 1); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("SurdT: zero denominator");
        if (den < 0) { p = -p; q = -q; den = -den; }
        i64 g = std::gcd(std::gcd(std::abs(p), std::abs(q)), den);
        if (g > 1) { p /= g; q /= g; den /= g; }
    }

    friend SurdT operator+(const SurdT& a, const SurdT& b) {
        return SurdT(a.p * b.den + b.p * a.den, a.q * b.den + b.q * a.den, a.den * b.den);
    }
    friend SurdT operator-(const SurdT& a, const SurdT& b) {
        return SurdT(a.p * b.den - b.p * a.den, a.q * b.den - b.q * a.den, a.den * b.den);
    }
    SurdT operator-() const { return SurdT(-p, -q, den); }
    friend SurdT operator*(const SurdT& a, const SurdT& b) {
        return SurdT(a.p * b.p + i64(D) * a.q * b.q, a.p * b.q + a.q * b.p, a.den * b.den);
    }
    SurdT inverse() const {
        i64 n = p * p - i64(D) * q * q;
        if (n == 0) throw std::domain_error("SurdT: inverse of zero norm");
        return SurdT(p * den, -q * den, n);
    }
    friend SurdT operator/(const SurdT& a, const SurdT& b) { return a * b.inverse(); }

    // exact sign of p + q*sqrt(D)
    static int sign_pq(i64 p, i64 q) {
        if (p == 0 && q == 0) return 0;
        if (p >= 0 && q >= 0) return +1;
        if (p <= 0 && q <= 0) return -1;
        i128 ps = i128(p) * p, qs = i128(D) * q * q;
        if (p > 0) return ps > qs ? +1 : (ps < qs ? -1 : 0);
        return qs > ps ? +1 : (qs < ps ? -1 : 0);
    }
    int sign() const { return sign_pq(p, q); }
    bool is_zero() const { return p == 0 && q == 0; }

    friend bool operator==(const SurdT& a, const SurdT& b) {
        return a.p == b.p && a.q == b.q && a.den == b.den;
    }
    friend bool operator!=(const SurdT& a, const SurdT& b) { return !(a == b); }
    friend bool operator<(const SurdT& a, const SurdT& b) { return (a - b).sign() < 0; }
    friend bool operator>(const SurdT& a, const SurdT& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const SurdT& a, const SurdT& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const SurdT& a, const SurdT& b) { return (a - b).sign() >= 0; }

    double to_double() const;
    std::string str() const;
};

template <int D>
inline double SurdT<D>::to_double() const {
    static const double r = [] {
        double x = D;
        double y = x / 2;
        for (int i = 0; i < 60; i++) y = (y + x / y) / 2;
        return y;
    }();
    return (double(p) + double(q) * r) / double(den);
}

template <int D>
inline std::string SurdT<D>::str() const {
    std::string s = "(" + std::to_string(p);
    if (q != 0) s += (q > 0 ? "+" : "") + std::to_string(q) + "*sqrt(" + std::to_string(D) + ")";
    s += ")";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

using Surd = SurdT<3>;   // ExactScalar of the tiling world
using Surd15 = SurdT<15>;

// Plane point/vector as integer 4-tuple over u(k) = (cos 30k, sin 30k), k = 0..3.
// The rational embedding is injective, so tuple equality is point equality.
struct Coord4 {
    std::array<i64, 4> c{0, 0, 0, 0};

    constexpr Coord4() = default;
    constexpr Coord4(i64 a, i64 b, i64 cc, i64 d) : c{a, b, cc, d} {}

    friend Coord4 operator+(const Coord4& a, const Coord4& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend Coord4 operator-(const Coord4& a, const Coord4& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    Coord4 operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    friend Coord4 operator*(i64 k, const Coord4& a) {
        return {k * a.c[0], k * a.c[1], k * a.c[2], k * a.c[3]};
    }
    friend bool operator==(const Coord4& a, const Coord4& b) { return a.c == b.c; }
    friend bool operator!=(const Coord4& a, const Coord4& b) { return a.c != b.c; }
    friend bool operator<(const Coord4& a, const Coord4& b) { return a.c < b.c; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    // rotation by 30 degrees: u(0)->u(1), u(1)->u(2), u(2)->u(3), u(3)->u(2)-u(0)
    Coord4 rot30() const { return {-c[3], c[0], c[1] + c[3], c[2]}; }
    Coord4 rot(int k) const {
        Coord4 v = *this;
        k %= 12; if (k < 0) k += 12;
        for (int i = 0; i < k; i++) v = v.rot30();
        return v;
    }
    // reflection across the x axis
    Coord4 reflect_x() const { return {c[0] + c[2], c[1], -c[2], -c[1] - c[3]}; }

    // exact embedding; x = (ex_p + ex_q*sqrt3)/2, y likewise
    Surd x() const { return Surd(2 * c[0] + c[2], c[1], 2); }
    Surd y() const { return Surd(c[1] + 2 * c[3], c[2], 2); }
    double fx() const { return x().to_double(); }
    double fy() const { return y().to_double(); }
};

inline Coord4 unit(int k) {
    k %= 12; if (k < 0) k += 12;
    static const std::array<Coord4, 12> U = [] {
        std::array<Coord4, 12> u{};
        u[0] = {1, 0, 0, 0}; u[1] = {0, 1, 0, 0}; u[2] = {0, 0, 1, 0}; u[3] = {0, 0, 0, 1};
        for (int i = 4; i < 12; i++) u[i] = u[i - 1].rot30();
        return u;
    }();
    return U[k];
}

// sqrt(3) * u(k) = u(k-1) + u(k+1); integer tuple
inline Coord4 sqrt3_unit(int k) { return unit(k - 1) + unit(k + 1); }

// Edge direction u(k), k mod 12. parity(k) distinguishes "even"/"odd" edges.
struct Direction {
    int k = 0;
    explicit Direction(int kk = 0) : k(((kk % 12) + 12) % 12) {}
    bool even() const { return k % 2 == 0; }
    Coord4 vec() const { return unit(k); }
    friend bool operator==(Direction a, Direction b) { return a.k == b.k; }
};

// Plane isometry: optional reflection (across x), then rotation by 30*rot degrees,
// then translation.
struct Isometry {
    int rot = 0;          // mod 12
    bool reflect = false;
    Coord4 trans{};

    static Isometry identity() { return {}; }
    static Isometry rotation(int k) { Isometry g; g.rot = ((k % 12) + 12) % 12; return g; }
    static Isometry translation(const Coord4& t) { Isometry g; g.trans = t; return g; }

    Coord4 operator()(const Coord4& v) const {
        Coord4 w = reflect ? v.reflect_x() : v;
        return w.rot(rot) + trans;
    }
    // composition: (a*b)(v) == a(b(v))
    friend Isometry compose(const Isometry& a, const Isometry& b) {
        Isometry g;
        g.reflect = a.reflect != b.reflect;
        g.rot = ((a.reflect ? -b.rot : b.rot) + a.rot) % 12;
        if (g.rot < 0) g.rot += 12;
        g.trans = a(b.trans);
        return g;
    }
    Isometry inverse() const {
        // reflection conjugates rotation: M*R(th) == R(-th)*M
        Isometry g;
        g.reflect = reflect;
        if (reflect) {
            g.rot = rot;
            g.trans = -trans.reflect_x().rot(rot);
        } else {
            g.rot = (12 - rot) % 12;
            g.trans = -trans.rot(-rot);
        }
        return g;
    }
    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.rot == b.rot && a.reflect == b.reflect && a.trans == b.trans;
    }
};

struct Coord4Hash {
    size_t operator()(const Coord4& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (i64 x : v.c) {
            h ^= std::uint64_t(x);
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

// 2x2 integer matrix acting on (Spectre count, Mystic count)
struct SubstMatrix {
    std::array<std::array<i64, 2>, 2> m{{{7, 6}, {1, 1}}};
    std::array<i64, 2> apply(const std::array<i64, 2>& v) const {
        return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
    }
};

// exact roots of x^2 - 8x + 1: 4 +- sqrt(15)
inline std::pair<Surd15, Surd15> subst_matrix_eigen() {
    return {Surd15(4, 1, 1), Surd15(4, -1, 1)};
}

}  // namespace spectre
