#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace orderdraw {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph with both an adjacency matrix and sorted
/// adjacency lists.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n = 0) : n_(n), adj_(n * n, 0), neighbors_(n) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Idempotent. Throws Error on a loop or an out-of-range vertex.
    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const { return adj_[u * n_ + v] != 0; }
    const std::vector<VertexId> &neighbors(VertexId v) const { return neighbors_[v]; }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

private:
    std::size_t n_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<VertexId>> neighbors_;
};

/// Result of 2-colouring a graph with some vertices removed. Either a
/// partition (odd_cycle empty) or an odd closed walk as witness.
struct Bipartition {
    std::vector<VertexId> part1;
    std::vector<VertexId> part2;
    /// v0 v1 ... v(L-1) with consecutive vertices adjacent, v(L-1) adjacent
    /// to v0 and L odd.
    std::vector<VertexId> odd_cycle;

    bool bipartite() const noexcept { return odd_cycle.empty(); }
};

/// BFS 2-colouring of `g` minus the vertices flagged in `removed` (an empty
/// mask removes nothing).
Bipartition bipartite_check(const SimpleGraph &g, const std::vector<bool> &removed = {});
Bipartition bipartite_check(const SimpleGraph &g, std::span<const VertexId> removed);

bool is_bipartite_without(const SimpleGraph &g, const std::vector<bool> &removed);

} // namespace orderdraw
