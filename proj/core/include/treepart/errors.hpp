#pragma once

#include <stdexcept>
#include <string>

namespace treepart {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad generator / builder parameters (e.g. spider with s < 2).
struct InvalidSpecError : Error {
    using Error::Error;
};

// An instance exceeds a configured search budget.
struct TooLargeError : Error {
    using Error::Error;
};

struct PatternTooLargeError : Error {
    using Error::Error;
};

// A tree-decomposition violates one of its three conditions.
struct InvalidDecompositionError : Error {
    using Error::Error;
};

// No bag of a decomposition yields a balanced separation; signals an
// invalid decomposition or an internal bug.
struct NoBalancedBagError : Error {
    using Error::Error;
};

// Suppressing degree-2 vertices would create a loop or parallel edge.
struct NotASubdivisionError : Error {
    using Error::Error;
};

// A query block is not a part of the partition backing an oracle.
struct UnsupportedBlockError : Error {
    using Error::Error;
};

// A component exceeds the width budget of a 0-tree-partition.
struct ComponentTooLargeError : Error {
    using Error::Error;
};

// An oracle answer failed verification or exceeded its declared bound.
struct OracleViolationError : Error {
    using Error::Error;
};

// Exact packing search ran out of branch nodes in exact mode.
struct PackingBudgetError : Error {
    using Error::Error;
};

struct NotWeaklyOuterKPlanarError : Error {
    using Error::Error;
};

// Suppressed core of a graph is too big for the star-minor-free bound.
struct CoreTooLargeError : Error {
    using Error::Error;
};

// The input provably violates the graph-class precondition of a builder;
// the message names the witness.
struct ClassViolationError : Error {
    using Error::Error;
};

// Malformed text input.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace treepart
