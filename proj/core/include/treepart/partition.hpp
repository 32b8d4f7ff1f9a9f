#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "treepart/config.hpp"
#include "treepart/covering.hpp"
#include "treepart/graph.hpp"
#include "treepart/oracle.hpp"
#include "treepart/treewidth.hpp"

namespace treepart {

// An H-partition with a treewidth certificate for the quotient H.
struct CTreePartition {
    std::vector<int> part_of;       // vertex -> part id
    std::vector<VertexSet> parts;   // nonempty, partition V(G)
    Graph quotient;                 // H; every cross-part edge maps to an H-edge
    TreeDecomposition certificate;  // decomposition of H with width <= c
    int c = 0;
    int width = 0;                  // max part size

    // Run bookkeeping, serialized under [meta].
    std::int64_t k = 0;
    std::int64_t ell = 0;
    std::int64_t f_eff = 0;   // effective f(12k) of the run
    std::int64_t bound = 0;   // max{12*ell*k, 2*c*ell*f_eff}
    std::vector<std::string> flags;

    int part_count() const { return static_cast<int>(parts.size()); }
};

// Rebuilds parts/width from part_of and renumbers parts densely, dropping
// empty ones from the quotient and the certificate.
CTreePartition finalize_partition(std::vector<int> part_of, Graph quotient,
                                  TreeDecomposition certificate, int c);

// One part per component; quotient edgeless; width <= d or
// ComponentTooLargeError with the witness component.
CTreePartition component_partition_c0(const Graph& g, int d);

// The core recursion: given a decomposition of width < k, a (c,f)-disjointed
// l-covering and its oracle, produces a certified c-tree-partition of width
// at most max{12lk, 2cl*f_eff(12k)} where f_eff(t) = max(f(t), 4k) and f is
// the run's measured oracle bound.
CTreePartition compute_partition(const Graph& g, const TreeDecomposition& td,
                                 const Covering& beta, const QOracle& oracle, int c,
                                 const Config& cfg = Config::defaults());

// Flat-bound variant: lifts `base` (per-query bound d = base.bound(1) over
// single blocks) to block unions with f(t) = d*t^c, then runs the recursion.
CTreePartition compute_partition_cd(const Graph& g, const TreeDecomposition& td,
                                    const Covering& beta,
                                    std::shared_ptr<const QOracle> base, int c,
                                    const Config& cfg = Config::defaults());

// Structured text with sections [parts], [quotient], [certificate], [meta].
void write_partition(std::ostream& out, const CTreePartition& p);
CTreePartition read_partition(std::istream& in);
void save_partition(const std::string& path, const CTreePartition& p);
CTreePartition load_partition(const std::string& path);

}  // namespace treepart
