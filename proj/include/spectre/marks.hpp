#pragma once

// The nine marked hexagon kinds and their lettered, signed edges.

#include <array>
#include <cstdint>
#include <string>

namespace spectre {

enum class HexKind : std::uint8_t { Gamma, Delta, Theta, Lambda, Xi, Pi, Sigma, Phi, Psi };
inline constexpr int kNumHexKinds = 9;
inline constexpr std::array<HexKind, 9> kAllHexKinds = {
    HexKind::Gamma, HexKind::Delta, HexKind::Theta, HexKind::Lambda, HexKind::Xi,
    HexKind::Pi,    HexKind::Sigma, HexKind::Phi,   HexKind::Psi};

std::string to_string(HexKind k);
HexKind hex_kind_from_string(const std::string& s);

enum class Letter : std::uint8_t { Alpha, Beta, Gamma, Delta, Epsilon, Zeta, Eta, Theta };

// sign: +1, -1, or 0 (eta only)
struct EdgeLabel {
    Letter letter = Letter::Eta;
    std::int8_t sign = 0;

    friend bool operator==(EdgeLabel a, EdgeLabel b) {
        return a.letter == b.letter && a.sign == b.sign;
    }
    friend bool operator!=(EdgeLabel a, EdgeLabel b) { return !(a == b); }
    friend bool operator<(EdgeLabel a, EdgeLabel b) {
        if (a.letter != b.letter) return a.letter < b.letter;
        return a.sign < b.sign;
    }
    EdgeLabel mate() const { return {letter, std::int8_t(-sign)}; }
    std::string str() const;
};

EdgeLabel edge_label_from_string(const std::string& s);

// same letter and opposite signs (or no sign)
inline bool matches(EdgeLabel a, EdgeLabel b) {
    return a.letter == b.letter && a.sign == -b.sign;
}

// one of nine combinatorial hexagons with six lettered, signed edges; the edge
// index is the honeycomb direction the edge faces when the hexagon is unrotated
struct MarkedHexagon {
    HexKind kind;
    std::array<EdgeLabel, 6> labels;
};

// the frozen table, canonical edge order fixed by the cluster classification bridge
const std::array<MarkedHexagon, 9>& hexagon_table();

inline const MarkedHexagon& marked_hexagon(HexKind k) {
    return hexagon_table()[size_t(k)];
}

// label of the edge of (kind, rot) facing honeycomb direction d
inline EdgeLabel facing_label(HexKind kind, int rot, int d) {
    return marked_hexagon(kind).labels[((d - rot) % 6 + 6) % 6];
}

}  // namespace spectre
