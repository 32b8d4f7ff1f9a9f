#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/graph.hpp"

namespace treepart {

// An l-covering: blocks of size <= l whose union is the vertex set. When
// is_partition holds the blocks are pairwise disjoint.
struct Covering {
    std::vector<VertexSet> blocks;
    int l = 0;  // declared max block size
    bool is_partition = false;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

Covering singleton_partition(const Graph& g);

// Blocks intersected with `sub`, empties dropped; declared l unchanged.
Covering restrict_covering(const Covering& beta, const VertexSet& sub);

// Union of at most t blocks of some covering. `members` lists the block
// indices (empty when the union is a raw vertex set not tied to a covering).
struct BlockUnion {
    std::vector<int> members;
    VertexSet vertices;
};

BlockUnion block_union(const Covering& beta, std::vector<int> members);

// A c-tuple of block unions together with one component X of the graph minus
// their union. Residuals B'_i = B_i \ (B_1 ∪ ... ∪ B_{i-1}) are cached.
struct DisjointednessQuery {
    std::vector<BlockUnion> blocks;
    VertexSet x;
    std::vector<VertexSet> residuals;

    int c() const { return static_cast<int>(blocks.size()); }
};

DisjointednessQuery make_query(std::vector<BlockUnion> blocks, VertexSet x);

// All queries for one tuple: one per component of g minus the union.
std::vector<DisjointednessQuery> queries_for_tuple(const Graph& g,
                                                   std::vector<BlockUnion> blocks);

// A hitting set Q ⊆ X plus, for each component Y of X - Q in canonical order
// (sorted by smallest vertex), the index i with Y ∩ N_G(B'_i) = ∅.
struct QWitness {
    VertexSet q;
    std::vector<int> assignment;  // 1-based would invite off-by-ones; 0-based block index
};

struct WitnessReport {
    bool pass = false;
    std::string reason;  // empty when pass
};

// Checks |Q| <= d, Q ⊆ X, and the supplied per-component assignment,
// vertex by vertex. Failures are reported, not raised.
WitnessReport verify_witness(const Graph& g, const DisjointednessQuery& q, const QWitness& w,
                             int d);

// Greedy lowest-index assignment for a given Q, or nullopt if some component
// of X - Q touches every residual neighborhood.
std::optional<std::vector<int>> assign_components(const Graph& g, const DisjointednessQuery& q,
                                                  const VertexSet& Q);

// Minimum-cardinality valid Q by subset enumeration; |X| <= 16 budget.
QWitness brute_min_q(const Graph& g, const DisjointednessQuery& q,
                     const Config& cfg = Config::defaults());

struct DisjointednessCheck {
    bool pass = true;
    std::optional<DisjointednessQuery> counterexample;
};

// Decides whether beta is (c,d)-disjointed by enumerating all c-tuples of
// blocks and all components, answering each with brute_min_q.
DisjointednessCheck check_cd_disjointed(const Graph& g, const Covering& beta, int c, int d,
                                        const Config& cfg = Config::defaults());

// Text format: one line per block, space-separated vertex ids.
void write_covering(std::ostream& out, const Covering& beta);
Covering read_covering(std::istream& in, bool expect_partition);

}  // namespace treepart
