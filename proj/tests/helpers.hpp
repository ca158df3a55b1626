#pragma once

#include <random>
#include <vector>

#include "treecount/multigraph.hpp"

namespace treecount::testutil {

/// K_n with unit multiplicities.
inline MultiGraph complete(std::size_t n) {
    MultiGraph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) g = g.add_edges(i, j, 1);
    return g;
}

/// Two vertices joined by m parallel edges.
inline MultiGraph banana(unsigned long m) {
    return MultiGraph(2).add_edges(0, 1, m);
}

inline MultiGraph path(std::size_t n) {
    MultiGraph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g = g.add_edges(i, i + 1, 1);
    return g;
}

inline MultiGraph cycle(std::size_t n) {
    MultiGraph g = path(n);
    return g.add_edges(n - 1, 0, 1);
}

/// Random connected multigraph: a random spanning tree plus extra edges,
/// multiplicities in [1, max_mult].
inline MultiGraph random_connected(std::mt19937& rng, std::size_t max_vertices = 7,
                                   unsigned max_mult = 4) {
    std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
    const std::size_t n = nv(rng);
    std::uniform_int_distribution<unsigned> mult(1, max_mult);
    MultiGraph g(n);
    for (VertexId v = 1; v < n; ++v) {
        std::uniform_int_distribution<VertexId> parent(0, v - 1);
        g = g.add_edges(parent(rng), v, mult(rng));
    }
    std::uniform_int_distribution<std::size_t> extra(0, n);
    std::uniform_int_distribution<VertexId> any(0, n - 1);
    for (std::size_t i = extra(rng); i > 0; --i) {
        VertexId u = any(rng), v = any(rng);
        if (u != v) g = g.add_edges(u, v, mult(rng));
    }
    return g;
}

inline std::vector<VertexId> random_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace treecount::testutil
