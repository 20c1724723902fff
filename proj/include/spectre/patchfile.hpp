#pragma once

// Line-oriented patch interchange format with a stable content hash.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spectre/marks.hpp"
#include "spectre/tiles.hpp"

namespace spectre {

struct PatchFile {
    int version = 1;
    struct Record {
        std::string shape;  // tile11 | hat | turtle
        int rot = 0;        // 0..11
        int reflect = 0;    // 0|1
        Coord4 trans;
        int mark_cluster = -1;  // optional HexKind index, -1 if unmarked
    };
    std::vector<Record> records;

    static PatchFile from_patch(const Patch& p);
    Patch to_patch() const;

    std::uint64_t content_hash() const;  // over canonicalized record order
    void write(std::ostream& os) const;
    // throws std::runtime_error with line information on malformed input
    static PatchFile read(std::istream& is);
};

void write_patch_file(const std::string& path, const PatchFile& pf);
PatchFile read_patch_file(const std::string& path);

}  // namespace spectre
