#include "spectre/patchfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spectre {

namespace {

TileKind kind_from_name(const std::string& s) {
    if (s == "tile11") return TileKind::Tile11;
    if (s == "hat") return TileKind::Hat;
    if (s == "turtle") return TileKind::Turtle;
    throw std::runtime_error("unknown shape name: " + s);
}

std::string record_line(const PatchFile::Record& r) {
    std::ostringstream os;
    os << "tile " << r.shape << " " << r.rot << " " << r.reflect;
    for (int i = 0; i < 4; i++) os << " " << r.trans.c[size_t(i)];
    return os.str();
}

}  // namespace

PatchFile PatchFile::from_patch(const Patch& p) {
    PatchFile pf;
    for (const auto& t : p.tiles) {
        Record r;
        r.shape = to_string(t.kind);
        r.rot = t.pose.rot;
        r.reflect = t.pose.reflect ? 1 : 0;
        r.trans = t.pose.trans;
        pf.records.push_back(r);
    }
    return pf;
}

Patch PatchFile::to_patch() const {
    Patch p;
    for (const auto& r : records) {
        PlacedTile t;
        t.kind = kind_from_name(r.shape);
        t.pose.rot = r.rot;
        t.pose.reflect = r.reflect != 0;
        t.pose.trans = r.trans;
        p.tiles.push_back(t);
    }
    return p;
}

std::uint64_t PatchFile::content_hash() const {
    std::vector<std::string> lines;
    lines.reserve(records.size());
    for (const auto& r : records) {
        std::string l = record_line(r);
        if (r.mark_cluster >= 0) l += " mark " + to_string(HexKind(r.mark_cluster));
        lines.push_back(l);
    }
    std::sort(lines.begin(), lines.end());
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& l : lines) {
        for (char c : l) {
            h ^= std::uint64_t(std::uint8_t(c));
            h *= 1099511628211ull;
        }
        h ^= 0x0a;
        h *= 1099511628211ull;
    }
    return h;
}

void PatchFile::write(std::ostream& os) const {
    os << "spectre-patch v" << version << "\n";
    os << "coords u0..u3 integer\n";
    os << "tiles " << records.size() << "\n";
    for (const auto& r : records) {
        os << record_line(r) << "\n";
        if (r.mark_cluster >= 0)
            os << "mark " << (&r - records.data()) << " cluster "
               << to_string(HexKind(r.mark_cluster)) << "\n";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(content_hash()));
    os << "hash fnv1a64 " << buf << "\n";
    os << "end\n";
}

PatchFile PatchFile::read(std::istream& is) {
    PatchFile pf;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("patch file line " + std::to_string(lineno) + ": " + msg);
    };
    auto next = [&]() -> bool {
        if (!std::getline(is, line)) return false;
        lineno++;
        return true;
    };
    if (!next() || line.rfind("spectre-patch v", 0) != 0) fail("missing header");
    pf.version = std::atoi(line.c_str() + 15);
    if (pf.version != 1) fail("unsupported version " + std::to_string(pf.version));
    if (!next() || line.rfind("coords ", 0) != 0) fail("missing coords line");
    if (!next() || line.rfind("tiles ", 0) != 0) fail("missing tiles count");
    size_t n = size_t(std::atoll(line.c_str() + 6));
    bool saw_hash = false, saw_end = false;
    std::uint64_t file_hash = 0;
    while (next()) {
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "tile") {
            Record r;
            ls >> r.shape >> r.rot >> r.reflect;
            for (int i = 0; i < 4; i++) ls >> r.trans.c[size_t(i)];
            if (!ls) fail("malformed tile record");
            if (r.rot < 0 || r.rot > 11) fail("rotation out of range");
            if (r.reflect != 0 && r.reflect != 1) fail("reflect flag out of range");
            kind_from_name(r.shape);
            pf.records.push_back(r);
        } else if (tok == "mark") {
            size_t idx;
            std::string what, kind;
            ls >> idx >> what >> kind;
            if (!ls || what != "cluster") fail("malformed mark record");
            if (idx >= pf.records.size()) fail("mark index out of range");
            pf.records[idx].mark_cluster = int(hex_kind_from_string(kind));
        } else if (tok == "hash") {
            std::string algo, hex;
            ls >> algo >> hex;
            if (algo != "fnv1a64") fail("unknown hash algorithm");
            file_hash = std::stoull(hex, nullptr, 16);
            saw_hash = true;
        } else if (tok == "end") {
            saw_end = true;
            break;
        } else if (tok.empty() || tok[0] == '#') {
            continue;
        } else {
            fail("unknown record type '" + tok + "'");
        }
    }
    if (!saw_end) fail("truncated file: missing end marker");
    if (pf.records.size() != n) fail("tile count mismatch");
    if (saw_hash && file_hash != pf.content_hash()) fail("content hash mismatch");
    return pf;
}

void write_patch_file(const std::string& path, const PatchFile& pf) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    pf.write(os);
}

PatchFile read_patch_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return PatchFile::read(is);
}

}  // namespace spectre
