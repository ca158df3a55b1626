#include "treecount/deletion.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "treecount/oracles.hpp"

namespace treecount {

std::vector<ExpansionTerm> expand_at(const MultiGraph& g, VertexId u) {
    if (!g.is_connected()) throw NotConnected("expand_at requires a connected graph");
    auto nbrs = g.neighbors(u);
    const std::size_t d = nbrs.size();
    if (d == 0) throw IsolatedPivot("pivot has no neighbors");
    if (d == 1) throw Error("pivot has a single neighbor; apply pendant reduction instead");
    MultiGraph h = g.delete_vertex(u);
    if (!h.is_connected()) throw CutVertexPivot("pivot is a cut vertex");

    // Neighbor ids shift down across the deletion.
    std::vector<VertexId> ids(d);
    std::vector<BigCount> mults(d);
    BigCount mult_sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
        ids[i] = nbrs[i].first > u ? nbrs[i].first - 1 : nbrs[i].first;
        mults[i] = nbrs[i].second;
        mult_sum += mults[i];
    }

    std::vector<ExpansionTerm> terms;
    terms.push_back({mult_sum, h});
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        if (std::popcount(mask) < 2) continue;
        BigCount coeff = 1;
        std::vector<VertexId> subset;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                coeff *= mults[i];
                subset.push_back(ids[i]);
            }
        terms.push_back({std::move(coeff), h.identify_vertices(subset)});
    }
    return terms;
}

namespace {

std::vector<BigCount> degree_sequence(const MultiGraph& g) {
    std::vector<BigCount> deg(g.vertex_count(), 0);
    for (const auto& [uv, m] : g.edges()) {
        deg[uv.first] += m;
        deg[uv.second] += m;
    }
    return deg;
}

// Backtracking minimization of the column-major upper-triangle multiplicity
// matrix over vertex orderings, with prefix pruning.
struct Canonicalizer {
    const MultiGraph& g;
    std::size_t n;
    std::vector<VertexId> by_degree;
    std::vector<BigCount> best;
    bool have_best = false;
    std::vector<VertexId> order;
    std::vector<bool> used;
    std::vector<BigCount> prefix;

    explicit Canonicalizer(const MultiGraph& graph)
        : g(graph), n(graph.vertex_count()), used(n, false) {
        // Trying low-degree vertices first tends to reach the minimal
        // matrix early, which makes the tight-prefix prune bite.
        auto deg = degree_sequence(graph);
        by_degree.resize(n);
        for (VertexId v = 0; v < n; ++v) by_degree[v] = v;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&deg](VertexId a, VertexId b) { return deg[a] < deg[b]; });
    }

    // tight: prefix equals best on every position filled so far. A branch
    // is cut as soon as a tight prefix exceeds best.
    void search(bool tight) {
        if (order.size() == n) {
            // best may have shrunk since this branch went non-tight, so a
            // full compare is required at the leaf
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        for (VertexId v : by_degree) {
            if (used[v]) continue;
            const std::size_t mark = prefix.size();
            bool child_tight = tight && have_best;
            bool viable = true;
            for (VertexId w : order) {
                prefix.push_back(g.multiplicity(w, v));
                if (child_tight) {
                    int c = cmp(prefix.back(), best[prefix.size() - 1]);
                    if (c > 0) {
                        viable = false;
                        break;
                    }
                    if (c < 0) child_tight = false;
                }
            }
            if (viable) {
                used[v] = true;
                order.push_back(v);
                search(child_tight);
                order.pop_back();
                used[v] = false;
            }
            prefix.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_key(const MultiGraph& g, std::size_t limit) {
    const std::size_t n = g.vertex_count();
    if (n > limit)
        throw TooLargeToCanonicalize(std::to_string(n) + " vertices exceeds canonicalization limit");
    Canonicalizer canon(g);
    canon.search(true);
    std::string key = std::to_string(n) + ":";
    for (const BigCount& m : canon.best) {
        key += m.get_str();
        key += ',';
    }
    return key;
}

namespace {

std::optional<VertexId> pendant_vertex(const MultiGraph& g) {
    std::vector<int> distinct(g.vertex_count(), 0);
    for (const auto& [uv, m] : g.edges()) {
        ++distinct[uv.first];
        ++distinct[uv.second];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (distinct[v] == 1) return v;
    return std::nullopt;
}

VertexId pick_pivot(const MultiGraph& g, const std::vector<VertexId>& candidates,
                    PivotStrategy strategy) {
    if (strategy == PivotStrategy::FirstNonCut) return candidates.front();
    std::vector<int> distinct(g.vertex_count(), 0);
    for (const auto& [uv, m] : g.edges()) {
        ++distinct[uv.first];
        ++distinct[uv.second];
    }
    VertexId best = candidates.front();
    for (VertexId v : candidates) {
        bool better = strategy == PivotStrategy::MinDegree ? distinct[v] < distinct[best]
                                                           : distinct[v] > distinct[best];
        if (better) best = v;
    }
    return best;
}

BigCount count_rec(const MultiGraph& g, const DeletionOptions& opts,
                   std::map<std::string, BigCount>& memo) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    if (!g.is_connected()) return 0;
    if (n == 1) return 1;
    if (n == 2) return g.total_multiplicity();
    if (n <= opts.oracle_floor) return matrix_tree_count(g);

    std::optional<std::string> key;
    if (opts.memo && n <= opts.canon_limit) {
        key = canonical_key(g, opts.canon_limit);
        auto it = memo.find(*key);
        if (it != memo.end()) return it->second;
    }

    BigCount result;
    if (auto pendant = pendant_vertex(g)) {
        BigCount a = g.weighted_degree(*pendant);
        result = a * count_rec(g.delete_vertex(*pendant), opts, memo);
    } else {
        auto non_cut = g.non_cut_vertices();
        if (non_cut.size() < n) {
            result = 1;
            for (const MultiGraph& block : g.block_decomposition())
                result *= count_rec(block, opts, memo);
        } else {
            VertexId pivot = pick_pivot(g, non_cut, opts.strategy);
            if (g.neighbors(pivot).size() > opts.neighbor_limit)
                throw NeighborhoodTooLarge("pivot neighborhood exceeds expansion limit");
            result = 0;
            for (const ExpansionTerm& term : expand_at(g, pivot))
                result += term.coefficient * count_rec(term.graph, opts, memo);
        }
    }

    if (key) memo.emplace(*key, result);
    return result;
}

}  // namespace

BigCount count_by_deletion(const MultiGraph& g, const DeletionOptions& opts) {
    std::map<std::string, BigCount> memo;
    return count_rec(g, opts, memo);
}

}  // namespace treecount
