#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "treecount/multigraph.hpp"

namespace treecount {

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {}

    std::size_t order() const { return order_; }
    BigCount& at(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const BigCount& at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

private:
    std::size_t order_;
    std::vector<BigCount> entries_;
};

/// Graph Laplacian: weighted degrees on the diagonal, negated
/// multiplicities off it. Rows sum to zero.
IntMatrix laplacian(const MultiGraph& g);

/// Exact determinant by Bareiss fraction-free elimination. Works on a
/// private copy; the 0x0 matrix has determinant 1.
BigCount det_bareiss(IntMatrix m);

/// t(g) via the Matrix-Tree theorem: determinant of the Laplacian with row
/// and column 0 removed. 1 for a single vertex, 0 for disconnected graphs.
BigCount matrix_tree_count(const MultiGraph& g);

inline constexpr unsigned long kDefaultBruteForceBudget = 10'000'000;

/// t(g) by enumerating (n-1)-subsets of support edges and summing the
/// multiplicity product of each spanning tree. Independent of the Laplacian
/// route. Throws TooLargeForBruteForce when C(edges, n-1) exceeds budget.
BigCount brute_force_count(const MultiGraph& g,
                           unsigned long budget = kDefaultBruteForceBudget);

}  // namespace treecount
