#include <doctest.h>

#include <random>

#include "treecount/families.hpp"
#include "treecount/oracles.hpp"

#include "helpers.hpp"

using namespace treecount;
using namespace treecount::testutil;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
BigCount det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    BigCount total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        BigCount term = m.at(0, j) * det_cofactor(sub);
        if (j % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("laplacian entries") {
    IntMatrix b3 = laplacian(banana(3));
    CHECK(b3.at(0, 0) == 3);
    CHECK(b3.at(0, 1) == -3);
    CHECK(b3.at(1, 0) == -3);
    CHECK(b3.at(1, 1) == 3);

    IntMatrix k3 = laplacian(complete(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(k3.at(i, j) == (i == j ? 2 : -1));
}

TEST_CASE("laplacian rows sum to zero and the full determinant vanishes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        MultiGraph g = random_connected(rng);
        IntMatrix l = laplacian(g);
        for (std::size_t i = 0; i < l.order(); ++i) {
            BigCount row = 0;
            for (std::size_t j = 0; j < l.order(); ++j) row += l.at(i, j);
            CHECK(row == 0);
        }
        CHECK(det_bareiss(l) == 0);
    }
}

TEST_CASE("det_bareiss basics") {
    IntMatrix id(3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(det_bareiss(id) == 1);

    IntMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = -1;
    m.at(1, 0) = -1;
    m.at(1, 1) = 2;
    CHECK(det_bareiss(m) == 3);

    CHECK(det_bareiss(IntMatrix(0)) == 1);

    // Laplacian minor of K_4 equals t(K_4)
    CHECK(matrix_tree_count(complete(4)) == 16);
}

TEST_CASE("det_bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> order(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(order(rng));
        for (std::size_t i = 0; i < m.order(); ++i)
            for (std::size_t j = 0; j < m.order(); ++j) m.at(i, j) = entry(rng);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("matrix_tree_count known values") {
    CHECK(matrix_tree_count(complete(5)) == 125);
    CHECK(matrix_tree_count(build(ModifiedBipartite{1, 2, 2})) == 4);
    CHECK(matrix_tree_count(MultiGraph(1)) == 1);
    CHECK(matrix_tree_count(MultiGraph(3)) == 0);
}

TEST_CASE("brute_force_count basics") {
    CHECK(brute_force_count(banana(7)) == 7);
    CHECK(brute_force_count(cycle(4)) == 4);
    CHECK(brute_force_count(build(GeneralizedBipartite{{3, 2}, 3})) == 450);
    CHECK(matrix_tree_count(build(GeneralizedBipartite{{3, 2}, 3})) == 450);
}

TEST_CASE("brute force budget") {
    CHECK_THROWS_AS(brute_force_count(complete(12), 100), TooLargeForBruteForce);
}

TEST_CASE("matrix-tree equals brute force on random multigraphs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        MultiGraph g = random_connected(rng);
        CHECK(matrix_tree_count(g) == brute_force_count(g));
    }
}

TEST_CASE("matrix_tree_count is relabeling invariant") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        MultiGraph g = random_connected(rng);
        auto perm = random_permutation(rng, g.vertex_count());
        CHECK(matrix_tree_count(g) == matrix_tree_count(g.permuted(perm)));
    }
}

TEST_CASE("zero count exactly for disconnected graphs") {
    MultiGraph two = MultiGraph(4).add_edges(0, 1, 2).add_edges(2, 3, 1);
    CHECK_FALSE(two.is_connected());
    CHECK(matrix_tree_count(two) == 0);
    CHECK(brute_force_count(two) == 0);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        MultiGraph g = random_connected(rng);
        CHECK(matrix_tree_count(g) > 0);
    }
}
