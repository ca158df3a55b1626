#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "treecount/errors.hpp"

namespace treecount {

using VertexId = std::uint32_t;
using BigCount = mpz_class;

/// Undirected multigraph: dense vertex ids in [0, vertex_count), edge
/// multiplicities stored once per unordered pair. Self-loops are never
/// stored (they carry no spanning trees). Instances are immutable values;
/// every structural operation returns a new graph.
class MultiGraph {
public:
    using EdgeMap = std::map<std::pair<VertexId, VertexId>, BigCount>;

    explicit MultiGraph(std::size_t vertex_count = 0) : n_(vertex_count) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t support_edge_count() const { return edges_.size(); }

    /// Sum of all multiplicities (edges counted with multiplicity).
    BigCount total_multiplicity() const;

    /// Multiplicity of the pair {u,v}; 0 if absent or u == v.
    const BigCount& multiplicity(VertexId u, VertexId v) const;

    /// Edge map keyed by (min(u,v), max(u,v)).
    const EdgeMap& edges() const { return edges_; }

    MultiGraph add_edges(VertexId u, VertexId v, const BigCount& mult) const;

    /// G - u: drop u and its incident edges, re-index the survivors densely
    /// preserving relative order.
    MultiGraph delete_vertex(VertexId u) const;

    /// Merge all vertices of s into one; multiplicities to outside vertices
    /// add up, edges internal to s become loops and are dropped. The merged
    /// vertex takes the slot of the smallest id in s; result is re-indexed.
    MultiGraph identify_vertices(const std::vector<VertexId>& s) const;

    /// Neighbors of u with their multiplicities, ascending by id.
    std::vector<std::pair<VertexId, BigCount>> neighbors(VertexId u) const;

    /// Weighted degree: sum of incident multiplicities.
    BigCount weighted_degree(VertexId u) const;

    bool is_connected() const;

    /// All u such that G - u stays connected. Throws NotConnected on
    /// disconnected input; never empty for connected graphs with >= 2
    /// vertices.
    std::vector<VertexId> non_cut_vertices() const;

    /// Biconnected blocks, cut vertices replicated into each incident block.
    /// t(G) is the product of t over the blocks.
    std::vector<MultiGraph> block_decomposition() const;

    /// Relabel vertices: vertex i of the result is vertex perm[i] of *this.
    MultiGraph permuted(const std::vector<VertexId>& perm) const;

    bool operator==(const MultiGraph& other) const = default;

private:
    void check_vertex(VertexId u) const;
    std::vector<std::vector<VertexId>> support_adjacency() const;

    std::size_t n_;
    EdgeMap edges_;
};

}  // namespace treecount
