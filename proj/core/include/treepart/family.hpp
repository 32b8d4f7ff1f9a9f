#pragma once

#include <string>
#include <vector>

#include "treepart/graph.hpp"

namespace treepart {

enum class FamilyKind {
    Path,              // P_n
    Cycle,             // C_n
    Star,              // K_{1,s}
    Complete,          // K_n
    CompleteBipartite, // K_{s,t}
    Grid,              // a x b grid
    Spider,            // S_{s,t}: (t-1)-subdivision of K_{1,s}
    Fan,               // path P_l plus a dominant vertex
    Gcl,               // G_{c,l}: recursively l copies hatted, base P_{l+1}
    Ccl,               // C_{c,l}: closure of the complete l-ary tree of height c
    SpiderLb,          // J_{c,N}: spider-free lower-bound family
    ClumpGadget,       // (t-1)-clique over an n-vertex path, edges by residue
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;

    std::string to_string() const;
    static FamilySpec parse(const std::string& text);  // e.g. "gcl 2 3", "spider 3 2"
};

// Builds the named graph. Generated vertices carry labels recording their
// role; id layouts are documented per family in generate()'s definition so
// tests can address e.g. "the dominant vertex" deterministically.
Graph generate(const FamilySpec& spec);

// Union of l vertex-disjoint copies; copy i occupies ids [i*n, (i+1)*n).
Graph disjoint_copies(const Graph& g, int l);

// Adds one vertex (id n) adjacent to all others, labelled "dominant".
Graph add_dominant(const Graph& g);

}  // namespace treepart
