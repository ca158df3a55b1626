#pragma once

#include <string>
#include <vector>

#include "treecount/multigraph.hpp"

namespace treecount {

/// One summand of the vertex-deletion expansion: coefficient times the
/// spanning-tree count of the attached graph.
struct ExpansionTerm {
    BigCount coefficient;
    MultiGraph graph;
};

enum class PivotStrategy { MinDegree, MaxDegree, FirstNonCut };

struct DeletionOptions {
    PivotStrategy strategy = PivotStrategy::MinDegree;
    bool memo = true;
    /// Below this vertex count the recursion falls through to the
    /// Matrix-Tree determinant. Set to 0 for pure-deletion runs.
    std::size_t oracle_floor = 5;
    /// Refuse pivots with more distinct neighbors than this (the expansion
    /// has 2^d terms).
    std::size_t neighbor_limit = 20;
    /// Graphs above this vertex count skip the memo cache.
    std::size_t canon_limit = 10;
};

/// Expand t(g) at a non-cut pivot u with d >= 2 distinct neighbors:
/// one term (sum of a_i, G - u) plus one term (product of a_i over S,
/// (G - u) with S identified) for every neighbor subset S with |S| >= 2.
/// Sum of coefficient * t(graph) over the result equals t(g).
std::vector<ExpansionTerm> expand_at(const MultiGraph& g, VertexId u);

/// Exact t(g) by recursive vertex deletion: pendant reduction, block
/// decomposition at cut vertices, and the subset expansion elsewhere.
BigCount count_by_deletion(const MultiGraph& g, const DeletionOptions& opts = {});

/// Labeling-invariant exact encoding of g: the lexicographically smallest
/// serialized multiplicity matrix over all vertex permutations, with
/// degree-class pruning. Isomorphic graphs get equal keys and vice versa.
/// Throws TooLargeToCanonicalize above the limit.
std::string canonical_key(const MultiGraph& g, std::size_t limit = 10);

}  // namespace treecount
