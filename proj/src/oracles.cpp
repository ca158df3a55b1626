#include "treecount/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace treecount {

IntMatrix laplacian(const MultiGraph& g) {
    IntMatrix l(g.vertex_count());
    for (const auto& [uv, m] : g.edges()) {
        auto [u, v] = uv;
        l.at(u, v) -= m;
        l.at(v, u) -= m;
        l.at(u, u) += m;
        l.at(v, v) += m;
    }
    return l;
}

BigCount det_bareiss(IntMatrix m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    BigCount prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;  // zero column below the diagonal
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigCount num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigCount(-m.at(n - 1, n - 1));
}

BigCount matrix_tree_count(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    if (n == 1) return 1;
    IntMatrix l = laplacian(g);
    IntMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) minor.at(i - 1, j - 1) = l.at(i, j);
    return det_bareiss(std::move(minor));
}

namespace {

// C(n, r), saturating at cap+1 so callers can compare against a budget
// without big-integer arithmetic.
unsigned long binom_capped(std::size_t n, std::size_t r, unsigned long cap) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned long result = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - r + i) / i;
    }
    return std::min(result, cap + 1);
}

struct UnionFind {
    std::vector<VertexId> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    VertexId find(VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

BigCount brute_force_count(const MultiGraph& g, unsigned long budget) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    if (n == 1) return 1;
    if (!g.is_connected()) return 0;

    std::vector<std::pair<VertexId, VertexId>> support;
    std::vector<const BigCount*> mult;
    for (const auto& [uv, m] : g.edges()) {
        support.push_back(uv);
        mult.push_back(&m);
    }
    const std::size_t e = support.size();
    const std::size_t need = n - 1;
    if (binom_capped(e, need, budget) > budget)
        throw TooLargeForBruteForce("C(" + std::to_string(e) + "," + std::to_string(need) +
                                    ") exceeds brute-force budget");

    BigCount total = 0;
    std::vector<std::size_t> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        UnionFind uf(n);
        bool acyclic = true;
        for (std::size_t i : pick)
            if (!uf.unite(support[i].first, support[i].second)) {
                acyclic = false;
                break;
            }
        if (acyclic) {
            // n-1 acyclic edges on n vertices form a spanning tree
            BigCount product = 1;
            for (std::size_t i : pick) product *= *mult[i];
            total += product;
        }
        // next combination in lexicographic order
        std::size_t i = need;
        while (i > 0 && pick[i - 1] == e - need + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

}  // namespace treecount
