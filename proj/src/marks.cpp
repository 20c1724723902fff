#include "spectre/marks.hpp"

#include <stdexcept>

namespace spectre {

std::string to_string(HexKind k) {
    switch (k) {
        case HexKind::Gamma: return "Gamma";
        case HexKind::Delta: return "Delta";
        case HexKind::Theta: return "Theta";
        case HexKind::Lambda: return "Lambda";
        case HexKind::Xi: return "Xi";
        case HexKind::Pi: return "Pi";
        case HexKind::Sigma: return "Sigma";
        case HexKind::Phi: return "Phi";
        case HexKind::Psi: return "Psi";
    }
    return "?";
}

HexKind hex_kind_from_string(const std::string& s) {
    for (HexKind k : kAllHexKinds)
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown hexagon kind: " + s);
}

std::string EdgeLabel::str() const {
    static const char* names = "abgdezht";
    std::string s(1, names[size_t(letter)]);
    if (sign > 0) s += '+';
    if (sign < 0) s += '-';
    return s;
}

EdgeLabel edge_label_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty edge label");
    static const std::string names = "abgdezht";
    auto pos = names.find(s[0]);
    if (pos == std::string::npos) throw std::invalid_argument("unknown edge letter: " + s);
    EdgeLabel l{Letter(pos), 0};
    if (s.size() > 1) l.sign = s[1] == '+' ? +1 : -1;
    return l;
}

namespace {
EdgeLabel L(const char* s) { return edge_label_from_string(s); }
}

const std::array<MarkedHexagon, 9>& hexagon_table() {
    // canonical cyclic order fixed by the cluster classification bridge
    static const std::array<MarkedHexagon, 9> t = {{
        {HexKind::Gamma, {L("b-"), L("a-"), L("a+"), L("g-"), L("d-"), L("b+")}},
        {HexKind::Delta, {L("b+"), L("e-"), L("a+"), L("g-"), L("z-"), L("g+")}},
        {HexKind::Theta, {L("b+"), L("t+"), L("b+"), L("h"), L("b-"), L("g+")}},
        {HexKind::Lambda, {L("b+"), L("e-"), L("a+"), L("t-"), L("b-"), L("g+")}},
        {HexKind::Xi, {L("e+"), L("t+"), L("b+"), L("h"), L("b-"), L("a-")}},
        {HexKind::Pi, {L("e+"), L("e-"), L("a+"), L("t-"), L("b-"), L("a-")}},
        {HexKind::Sigma, {L("b+"), L("e-"), L("a+"), L("g-"), L("d+"), L("z+")}},
        {HexKind::Phi, {L("b+"), L("e-"), L("e+"), L("h"), L("b-"), L("g+")}},
        {HexKind::Psi, {L("e+"), L("e-"), L("e+"), L("h"), L("b-"), L("a-")}},
    }};
    return t;
}

}  // namespace spectre
