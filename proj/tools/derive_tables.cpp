// Regenerates the frozen tables in src/tables/ from scratch: the kite-grid
// enumeration drives the cluster table, the hexagon 5-patches drive the
// supertile table, and the realized substitution geometry drives the assembly
// chain constants. Output is printed to stdout per table (see --help).

#include <cstring>
#include <iostream>

#include "spectre/enumerate.hpp"
#include "spectre/hexsub.hpp"

using namespace spectre;

namespace {

void emit_cluster_table(const ClusterClassification& cc) {
    std::cout << "// generated cluster geometry data; regenerate with tools/derive_tables\n";
    auto emit_tiles = [&](const char* name, const std::vector<GridTile>& tiles, size_t n) {
        std::cout << "static const int " << name << "[" << n << "][4] = {\n";
        for (const auto& t : tiles) {
            std::cout << "    {" << (t.kind == TileKind::Hat ? 0 : 1) << ", " << t.pose.rot6
                      << ", " << t.pose.t.q << ", " << t.pose.t.r << "},\n";
        }
        std::cout << "};\n";
    };
    emit_tiles("kT7HTiles", cc.t7h_tiles, 8);
    emit_tiles("kT8HTiles", cc.t8h_tiles, 9);
    std::cout << "// per kind: is_t8h, then 6 vertices as Coord4 (hex-edge indexed)\n";
    std::cout << "static const int kClusterIsT8H[9] = {";
    for (int k = 0; k < 9; k++)
        std::cout << (cc.entries[size_t(k)].is_t8h ? 1 : 0) << (k < 8 ? ", " : "");
    std::cout << "};\n";
    std::cout << "static const long long kClusterVerts[9][6][4] = {\n";
    for (int k = 0; k < 9; k++) {
        std::cout << "    {";
        for (int e = 0; e < 6; e++) {
            const Coord4& v = cc.entries[size_t(k)].vertices[size_t(e)];
            std::cout << "{" << v.c[0] << "," << v.c[1] << "," << v.c[2] << "," << v.c[3] << "},";
        }
        std::cout << "},\n";
    }
    std::cout << "};\n";
}

void emit_supertile_table(const SupertileDerivation& sd) {
    std::cout << "// generated supertile layout data; regenerate with tools/derive_tables\n";
    std::cout << "static const int kFootprint[7][2] = {";
    for (int i = 0; i < 7; i++)
        std::cout << "{" << sd.footprint[size_t(i)].q << ", " << sd.footprint[size_t(i)].r << "}"
                  << (i < 6 ? ", " : "");
    std::cout << "};\n";
    std::cout << "static const int kFootprintExtra[2] = {" << sd.extra.q << ", " << sd.extra.r
              << "};\n";
    std::cout << "// children: kind, rot, q, r; -1 kind terminates\n";
    std::cout << "static const int kSuperChildren[9][8][4] = {\n";
    for (int k = 0; k < 9; k++) {
        const auto& L = sd.layouts[size_t(k)];
        std::cout << "    {";
        for (size_t i = 0; i < 8; i++) {
            if (i < L.children.size())
                std::cout << "{" << int(L.children[i].kind) << "," << L.children[i].rot << ","
                          << L.children[i].at.q << "," << L.children[i].at.r << "},";
            else
                std::cout << "{-1,0,0,0},";
        }
        std::cout << "},\n";
    }
    std::cout << "};\n";
    size_t maxlen = 0;
    for (const auto& L : sd.layouts)
        for (const auto& se : L.superedges) maxlen = std::max(maxlen, se.size());
    std::cout << "// superedges[kind][parent edge]: (footprint cell index, dir); -1 ends\n";
    std::cout << "static const int kSuperEdgeLen = " << maxlen << ";\n";
    std::cout << "static const int kSuperEdges[9][6][" << maxlen << "][2] = {\n";
    // footprint cell indexing: R cells then X
    std::vector<Axial> cells(sd.footprint.begin(), sd.footprint.end());
    cells.push_back(sd.extra);
    for (int k = 0; k < 9; k++) {
        const auto& L = sd.layouts[size_t(k)];
        std::cout << "    {\n";
        for (int e = 0; e < 6; e++) {
            std::cout << "        {";
            const auto& se = L.superedges[size_t(e)];
            for (auto [ci, d] : se) {
                Axial at = L.children[size_t(ci)].at;
                auto it = std::find(cells.begin(), cells.end(), at);
                std::cout << "{" << (it - cells.begin()) << "," << d << "},";
            }
            for (size_t i = se.size(); i < maxlen; i++) std::cout << "{-1,-1},";
            std::cout << "},\n";
        }
        std::cout << "    },\n";
    }
    std::cout << "};\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string what = argc > 1 ? argv[1] : "all";
    if (what == "--help") {
        std::cout << "usage: derive_tables [cluster|supertile|assembly|all]\n";
        return 0;
    }
    try {
        if (what == "cluster" || what == "all") {
            std::cerr << "running forcing chain + classification...\n";
            ForcingChain fc = run_forcing_chain();
            ClusterClassification cc = classify_nine(fc);
            emit_cluster_table(cc);
        }
        if (what == "supertile" || what == "all") {
            std::cerr << "running hexagon 5-patches + supertile derivation...\n";
            const HexPatchList& red5 = hex_reduced(5);
            SupertileDerivation sd = derive_supertiles(red5);
            emit_supertile_table(sd);
        }
        if (what == "assembly" || what == "all") {
            std::cerr << "deriving assembly chain constants...\n";
            extern void emit_assembly_table();  // defined in derive_assembly.cpp
            emit_assembly_table();
        }
    } catch (const std::exception& e) {
        std::cerr << "derive_tables failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
