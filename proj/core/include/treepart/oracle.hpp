#pragma once

#include <cstdint>
#include <memory>

#include "treepart/config.hpp"
#include "treepart/covering.hpp"
#include "treepart/graph.hpp"

namespace treepart {

struct CTreePartition;

// The disjointedness interface: given a c-tuple of block unions and one
// component of the host graph minus their union, produce a hitting set Q
// within the declared bound. Answers always pass verify_witness with
// d = bound(t) for queries over unions of at most t blocks. Measured oracles
// grow bound() as queries are answered, so read it after a run.
class QOracle {
public:
    virtual ~QOracle() = default;
    virtual int arity() const = 0;
    virtual std::int64_t bound(int t) const = 0;
    virtual QWitness answer(const DisjointednessQuery& q) const = 0;
};

// Oracle for queries whose blocks are parts of a valid c-tree-partition:
// lifts the query to the quotient, walks the (deduplicated) certificate by
// the three-case subtree analysis, and returns the union of the parts picked
// there, clipped to X. Guarantees |Q| <= c * width(p). Query blocks must be
// single parts of p (UnsupportedBlockError otherwise); use lift_oracle for
// unions of parts.
std::unique_ptr<QOracle> oracle_from_partition(const Graph& g, const CTreePartition& p);

// Turns an oracle with flat per-query bound d = base.bound(1) over single
// blocks of beta into an oracle for block unions, with f(t) = d * t^c: the
// answer is the union over all tuples of constituent blocks of the base
// answer inside the enlarged component, clipped to X.
std::unique_ptr<QOracle> lift_oracle(std::shared_ptr<const QOracle> base, const Graph& g,
                                     Covering beta);

// Shared helper: completes a hitting set into a QWitness by assigning each
// component of X - Q the lowest feasible index; throws OracleViolationError
// if some component touches every residual neighborhood.
QWitness finish_witness(const Graph& g, const DisjointednessQuery& q, VertexSet Q);

}  // namespace treepart
