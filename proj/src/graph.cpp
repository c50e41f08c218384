#include "orderdraw/graph.hpp"

#include "orderdraw/errors.hpp"

#include <algorithm>
#include <queue>

namespace orderdraw {

void SimpleGraph::add_edge(VertexId u, VertexId v) {
    if (u >= n_ || v >= n_) {
        throw Error("edge endpoint out of range");
    }
    if (u == v) {
        throw Error("simple graphs have no loops");
    }
    if (has_edge(u, v)) {
        return;
    }
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
    auto insert_sorted = [](std::vector<VertexId> &list, VertexId x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(neighbors_[u], v);
    insert_sorted(neighbors_[v], u);
    ++edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v : neighbors_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Bipartition bipartite_check(const SimpleGraph &g, const std::vector<bool> &removed) {
    const std::size_t n = g.vertex_count();
    auto is_removed = [&](VertexId v) { return !removed.empty() && removed[v]; };

    constexpr int uncoloured = -1;
    std::vector<int> colour(n, uncoloured);
    std::vector<VertexId> parent(n, n);
    std::vector<std::size_t> depth(n, 0);
    Bipartition result;

    for (VertexId root = 0; root < n; ++root) {
        if (is_removed(root) || colour[root] != uncoloured) {
            continue;
        }
        colour[root] = 0;
        parent[root] = root;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            for (VertexId v : g.neighbors(u)) {
                if (is_removed(v)) {
                    continue;
                }
                if (colour[v] == uncoloured) {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push(v);
                } else if (colour[v] == colour[u]) {
                    // Both tree paths meet at the lowest common ancestor; the
                    // two branches plus edge (u,v) close an odd cycle.
                    std::vector<VertexId> left{u};
                    std::vector<VertexId> right{v};
                    VertexId a = u;
                    VertexId b = v;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    result.odd_cycle = std::move(left);
                    return result;
                }
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (is_removed(v)) {
            continue;
        }
        (colour[v] == 0 ? result.part1 : result.part2).push_back(v);
    }
    return result;
}

Bipartition bipartite_check(const SimpleGraph &g, std::span<const VertexId> removed) {
    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId v : removed) {
        mask.at(v) = true;
    }
    return bipartite_check(g, mask);
}

bool is_bipartite_without(const SimpleGraph &g, const std::vector<bool> &removed) {
    return bipartite_check(g, removed).bipartite();
}

} // namespace orderdraw
