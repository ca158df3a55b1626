#include <doctest.h>

#include <numeric>

#include "treecount/deletion.hpp"
#include "treecount/families.hpp"
#include "treecount/oracles.hpp"

#include "helpers.hpp"

using namespace treecount;
using namespace treecount::testutil;

TEST_CASE("build produces the documented shapes") {
    MultiGraph cone = build(Cone{3, 3});
    CHECK(cone.vertex_count() == 4);
    CHECK(cone.total_multiplicity() == 12);

    MultiGraph gb = build(GeneralizedBipartite{{3, 2}, 3});
    CHECK(gb.vertex_count() == 5);
    CHECK(gb.total_multiplicity() == 15);  // n(k_1+k_2)

    MultiGraph hc = build(HalfCone{2, {1, 3}, 3});
    CHECK(hc.vertex_count() == 6);
    CHECK(hc.total_multiplicity() == 16);  // mk + n*sum(k_i)

    CHECK(build(Cone{4, 0}).vertex_count() == 1);
    CHECK(build(ModifiedBipartite{1, 3, 4}) == build(GeneralizedBipartite{{1, 1, 1}, 4}));
}

TEST_CASE("formula_cone") {
    CHECK(formula_cone(3, 3) == 108);
    CHECK(matrix_tree_count(build(Cone{3, 3})) == 108);
    CHECK(formula_cone(5, 0) == 1);
    CHECK(formula_cone(7, 1) == 7);
}

TEST_CASE("formula_complete") {
    CHECK(formula_complete(4) == 16);
    CHECK(brute_force_count(complete(4)) == 16);
    CHECK(formula_complete(2) == 1);
    CHECK(formula_complete(1) == 1);
    CHECK(formula_complete(5) == 125);
    CHECK(formula_complete(5) == formula_cone(1, 4));
}

TEST_CASE("formula_modified_bipartite") {
    CHECK(formula_modified_bipartite(2, 3, 4) == 2048);
    CHECK(matrix_tree_count(build(ModifiedBipartite{2, 3, 4})) == 2048);
    CHECK(formula_modified_bipartite(5, 3, 1) == 5);
    CHECK(formula_modified_bipartite(3, 1, 4) == 81);
}

TEST_CASE("formula_bipartite") {
    CHECK(formula_bipartite(2, 2) == 4);
    CHECK(brute_force_count(cycle(4)) == 4);
    CHECK(formula_bipartite(1, 6) == 1);
    CHECK(formula_bipartite(3, 4) == 432);
    CHECK(matrix_tree_count(build(ModifiedBipartite{1, 3, 4})) == 432);
}

TEST_CASE("formula_generalized_bipartite") {
    CHECK(formula_generalized_bipartite({3, 2}, 3) == 450);
    CHECK(matrix_tree_count(build(GeneralizedBipartite{{3, 2}, 3})) == 450);
    CHECK(formula_generalized_bipartite({2, 3, 4}, 1) == 24);
    CHECK(formula_generalized_bipartite({1, 1, 1}, 4) == formula_bipartite(3, 4));
}

TEST_CASE("formula_half_cone") {
    CHECK(formula_half_cone(2, {1, 1}, 3) == 80);
    CHECK(matrix_tree_count(build(HalfCone{2, {1, 1}, 3})) == 80);
    CHECK(formula_half_cone(2, {1, 3}, 3) == 832);
    CHECK(matrix_tree_count(build(HalfCone{2, {1, 3}, 3})) == 832);
    CHECK(formula_half_cone(1, {1, 1}, 1) == 4);
    CHECK(brute_force_count(build(HalfCone{1, {1, 1}, 1})) == 4);
}

TEST_CASE("formula_half_cone_uniform") {
    CHECK(formula_half_cone_uniform(1, 1, 2, 1) == 4);
    CHECK(formula_half_cone_uniform(2, 1, 2, 3) == 80);
    // single column: two blocks B_s and B_k
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned s = 1; s <= 4; ++s) {
            CHECK(formula_half_cone_uniform(k, s, 1, 1) == s * k);
            CHECK(brute_force_count(build(HalfCone{k, {s}, 1})) == s * k);
        }
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned s = 1; s <= 3; ++s)
            for (unsigned m = 1; m <= 3; ++m)
                for (unsigned n = 1; n <= 3; ++n)
                    CHECK(formula_half_cone_uniform(k, s, m, n) ==
                          formula_half_cone(k, std::vector<unsigned>(m, s), n));
}

TEST_CASE("formula_multipartite") {
    CHECK(formula_multipartite({1, 1, 1}) == 3);
    CHECK(formula_multipartite({2, 2, 2}) == 384);
    CHECK(matrix_tree_count(build(Multipartite{{2, 2, 2}})) == 384);
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n)
            CHECK(formula_multipartite({m, n}) == formula_bipartite(m, n));
    CHECK_THROWS_AS(formula_multipartite({4}), InvalidPartition);
}

TEST_CASE("cone recurrence matches the closed form") {
    CHECK(cone_recurrence_dp(3, 3) == 108);
    CHECK(cone_recurrence_dp(9, 0) == 1);
    CHECK(cone_recurrence_dp(1, 4) == 125);
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 0; n <= 6; ++n) CHECK(cone_recurrence_dp(m, n) == formula_cone(m, n));
}

TEST_CASE("modified bipartite recurrence matches the closed form") {
    CHECK(modified_bipartite_recurrence_dp(2, 3, 4) == 2048);
    CHECK(modified_bipartite_recurrence_dp(7, 5, 1) == 7);
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            CHECK(modified_bipartite_recurrence_dp(1, m, n) == formula_bipartite(m, n));
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned m = 1; m <= 4; ++m)
            for (unsigned n = 1; n <= 4; ++n)
                CHECK(modified_bipartite_recurrence_dp(k, m, n) ==
                      formula_modified_bipartite(k, m, n));
}

TEST_CASE("elementary_symmetric") {
    CHECK(elementary_symmetric({1, 2, 3}, 2) == 11);
    CHECK(elementary_symmetric({9, 9, 9}, 0) == 1);
    CHECK(elementary_symmetric({2, 3, 5}, 3) == 30);
    CHECK_THROWS_AS(elementary_symmetric({1, 2}, 3), InvalidIndex);
}

TEST_CASE("lemma_sum_over_subsets") {
    auto [lhs, rhs] = lemma_sum_over_subsets({1, 2, 3}, 2);
    CHECK(lhs == 12);
    CHECK(rhs == 12);
    auto full = lemma_sum_over_subsets({4, 5, 6}, 3);
    CHECK(full.first == 15);
    CHECK(full.second == 15);
    auto singles = lemma_sum_over_subsets({4, 5, 6}, 1);
    CHECK(singles.first == 15);
    CHECK(singles.second == 15);
    CHECK_THROWS_AS(lemma_sum_over_subsets({1, 2}, 0), InvalidIndex);
}

TEST_CASE("lemma_complement_product_sum") {
    auto [lhs, rhs] = lemma_complement_product_sum({1, 2, 3}, 2);
    CHECK(lhs == 22);
    CHECK(rhs == 22);
    auto full = lemma_complement_product_sum({1, 2, 3}, 3);
    CHECK(full.first == 6);
    CHECK(full.second == 6);
    auto one = lemma_complement_product_sum({5}, 1);
    CHECK(one.first == 5);
    CHECK(one.second == 5);
}

TEST_CASE("both lemmas hold on exhaustive small inputs") {
    // all value lists of length <= 4 with entries <= 4, every valid j
    std::vector<std::vector<unsigned>> lists{{}};
    for (int len = 0; len < 4; ++len) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& l : lists)
            for (unsigned v = 1; v <= 4; ++v) {
                auto e = l;
                e.push_back(v);
                next.push_back(e);
            }
        for (const auto& l : next) {
            for (std::size_t j = 1; j <= l.size(); ++j) {
                auto a = lemma_sum_over_subsets(l, j);
                CHECK(a.first == a.second);
                auto b = lemma_complement_product_sum(l, j);
                CHECK(b.first == b.second);
            }
        }
        lists = std::move(next);
    }
}

TEST_CASE("half cone derivative identity") {
    CHECK(half_cone_derivative_identity(2, {1, 1}, 3) == 20);
    CHECK(half_cone_derivative_identity(2, {1, 3}, 3) == 52);
    CHECK(half_cone_derivative_identity(3, {2}, 1) == 6);
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 1; n <= 3; ++n)
            for (const auto& ks :
                 std::vector<std::vector<unsigned>>{{1}, {2}, {1, 2}, {3, 1}, {2, 2, 3}}) {
                unsigned long t = std::accumulate(ks.begin(), ks.end(), 0ul);
                BigCount tn;
                mpz_ui_pow_ui(tn.get_mpz_t(), t, n - 1);
                CHECK(tn * half_cone_derivative_identity(k, ks, n) ==
                      formula_half_cone(k, ks, n));
            }
}

TEST_CASE("formulas are symmetric in ks") {
    CHECK(formula_generalized_bipartite({3, 1, 2}, 4) == formula_generalized_bipartite({2, 3, 1}, 4));
    CHECK(formula_half_cone(2, {1, 3}, 3) == formula_half_cone(2, {3, 1}, 3));
    CHECK(formula_bipartite(3, 5) == formula_bipartite(5, 3));
    CHECK(matrix_tree_count(build(ModifiedBipartite{1, 2, 3})) ==
          matrix_tree_count(build(ModifiedBipartite{1, 3, 2})));
}

TEST_CASE("grid agreement: formula vs matrix-tree vs deletion") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 0; n <= 5; ++n) {
            MultiGraph g = build(Cone{m, n});
            CHECK(formula_cone(m, n) == matrix_tree_count(g));
            CHECK(formula_cone(m, n) == count_by_deletion(g));
        }
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned m = 1; m <= 4; ++m)
            for (unsigned n = 1; n <= 4; ++n) {
                MultiGraph g = build(ModifiedBipartite{k, m, n});
                CHECK(formula_modified_bipartite(k, m, n) == matrix_tree_count(g));
                CHECK(formula_modified_bipartite(k, m, n) == count_by_deletion(g));
            }
}
