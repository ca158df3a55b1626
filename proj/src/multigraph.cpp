#include "treecount/multigraph.hpp"

#include <algorithm>
#include <functional>

namespace treecount {

namespace {
std::pair<VertexId, VertexId> key(VertexId u, VertexId v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}
const BigCount kZero = 0;
}  // namespace

void MultiGraph::check_vertex(VertexId u) const {
    if (u >= n_) throw InvalidVertex("vertex id " + std::to_string(u) + " out of range");
}

BigCount MultiGraph::total_multiplicity() const {
    BigCount total = 0;
    for (const auto& [uv, m] : edges_) total += m;
    return total;
}

const BigCount& MultiGraph::multiplicity(VertexId u, VertexId v) const {
    if (u == v) return kZero;
    auto it = edges_.find(key(u, v));
    return it == edges_.end() ? kZero : it->second;
}

MultiGraph MultiGraph::add_edges(VertexId u, VertexId v, const BigCount& mult) const {
    if (u == v) throw SelfLoopRejected("self-loop on vertex " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    if (mult < 1) throw Error("multiplicity must be positive");
    MultiGraph g = *this;
    g.edges_[key(u, v)] += mult;
    return g;
}

MultiGraph MultiGraph::delete_vertex(VertexId u) const {
    check_vertex(u);
    if (n_ < 2) throw WouldEmptyGraph("cannot delete the last vertex");
    MultiGraph g(n_ - 1);
    for (const auto& [uv, m] : edges_) {
        auto [a, b] = uv;
        if (a == u || b == u) continue;
        g.edges_[key(a > u ? a - 1 : a, b > u ? b - 1 : b)] = m;
    }
    return g;
}

MultiGraph MultiGraph::identify_vertices(const std::vector<VertexId>& s) const {
    std::vector<VertexId> set = s;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() < 2) throw NothingToIdentify("need at least 2 distinct vertices");
    for (VertexId v : set) check_vertex(v);

    // Old id -> new id: the merged class lands on the slot of its smallest
    // member, all other vertices keep their relative order.
    VertexId target = set.front();
    VertexId merged_id = 0;
    for (VertexId v = 0; v < target; ++v)
        if (!std::binary_search(set.begin(), set.end(), v)) ++merged_id;
    std::vector<VertexId> remap(n_);
    VertexId next = 0;
    for (VertexId v = 0; v < n_; ++v) {
        if (std::binary_search(set.begin(), set.end(), v)) {
            remap[v] = merged_id;
        } else {
            remap[v] = next < merged_id ? next : next + 1;
            ++next;
        }
    }

    MultiGraph g(n_ - set.size() + 1);
    for (const auto& [uv, m] : edges_) {
        VertexId a = remap[uv.first], b = remap[uv.second];
        if (a == b) continue;  // internal edge becomes a loop, dropped
        g.edges_[key(a, b)] += m;
    }
    return g;
}

std::vector<std::pair<VertexId, BigCount>> MultiGraph::neighbors(VertexId u) const {
    check_vertex(u);
    std::vector<std::pair<VertexId, BigCount>> out;
    for (const auto& [uv, m] : edges_) {
        if (uv.first == u)
            out.emplace_back(uv.second, m);
        else if (uv.second == u)
            out.emplace_back(uv.first, m);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

BigCount MultiGraph::weighted_degree(VertexId u) const {
    check_vertex(u);
    BigCount d = 0;
    for (const auto& [uv, m] : edges_)
        if (uv.first == u || uv.second == u) d += m;
    return d;
}

std::vector<std::vector<VertexId>> MultiGraph::support_adjacency() const {
    std::vector<std::vector<VertexId>> adj(n_);
    for (const auto& [uv, m] : edges_) {
        adj[uv.first].push_back(uv.second);
        adj[uv.second].push_back(uv.first);
    }
    return adj;
}

bool MultiGraph::is_connected() const {
    if (n_ == 0) return false;
    auto adj = support_adjacency();
    std::vector<bool> seen(n_, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t visited = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++visited;
        for (VertexId w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return visited == n_;
}

std::vector<VertexId> MultiGraph::non_cut_vertices() const {
    if (!is_connected()) throw NotConnected("non_cut_vertices requires a connected graph");
    std::vector<VertexId> out;
    if (n_ == 1) return out;
    for (VertexId u = 0; u < n_; ++u)
        if (delete_vertex(u).is_connected()) out.push_back(u);
    return out;
}

std::vector<MultiGraph> MultiGraph::block_decomposition() const {
    if (!is_connected()) throw NotConnected("block_decomposition requires a connected graph");
    if (n_ == 1) return {*this};

    auto adj = support_adjacency();
    std::vector<int> disc(n_, -1), low(n_, 0);
    std::vector<std::pair<VertexId, VertexId>> edge_stack;
    std::vector<std::vector<std::pair<VertexId, VertexId>>> block_edges;
    int timer = 0;

    // Iterative Tarjan biconnected components on the support graph.
    struct Frame {
        VertexId v, parent;
        std::size_t next = 0;
    };
    std::vector<Frame> frames;
    frames.push_back({0, static_cast<VertexId>(0)});
    disc[0] = low[0] = timer++;
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next < adj[f.v].size()) {
            VertexId w = adj[f.v][f.next++];
            if (disc[w] == -1) {
                edge_stack.emplace_back(f.v, w);
                disc[w] = low[w] = timer++;
                frames.push_back({w, f.v});
            } else if (w != f.parent && disc[w] < disc[f.v]) {
                // back edge; adjacency lists are loop- and duplicate-free
                edge_stack.emplace_back(f.v, w);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            VertexId v = f.v, parent = f.parent;
            frames.pop_back();
            if (frames.empty()) break;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                // parent closes a block; pop edges up to (parent, v)
                std::vector<std::pair<VertexId, VertexId>> blk;
                while (!edge_stack.empty()) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    blk.push_back(e);
                    if (e.first == parent && e.second == v) break;
                }
                block_edges.push_back(std::move(blk));
            }
        }
    }

    std::vector<MultiGraph> blocks;
    for (const auto& blk : block_edges) {
        std::vector<VertexId> verts;
        for (auto [a, b] : blk) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        MultiGraph g(verts.size());
        std::vector<VertexId> local(n_, 0);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = i;
        for (auto [a, b] : blk)
            g.edges_[key(local[a], local[b])] = multiplicity(a, b);
        blocks.push_back(std::move(g));
    }
    return blocks;
}

MultiGraph MultiGraph::permuted(const std::vector<VertexId>& perm) const {
    if (perm.size() != n_) throw InvalidVertex("permutation size mismatch");
    std::vector<VertexId> inv(n_);
    for (VertexId i = 0; i < n_; ++i) inv[perm[i]] = i;
    MultiGraph g(n_);
    for (const auto& [uv, m] : edges_)
        g.edges_[key(inv[uv.first], inv[uv.second])] = m;
    return g;
}

}  // namespace treecount
