#pragma once
// Reference implementations used only by the tests. They are deliberately
// naive (explicit enumeration, plain vectors) and share no code with the
// library beyond the conversion helpers at the bottom.

#include "orderdraw/graph.hpp"
#include "orderdraw/order.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Arc = std::pair<std::size_t, std::size_t>;

/// Reflexive-transitive closure by DFS from every vertex.
inline Matrix closure(std::size_t n, const std::vector<Arc> &arcs) {
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto &[a, b] : arcs) {
        out[a].push_back(b);
    }
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack{s};
        m[s][s] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : out[u]) {
                if (!m[s][v]) {
                    m[s][v] = true;
                    stack.push_back(v);
                }
            }
        }
    }
    return m;
}

/// Directed cycle through at least two distinct vertices (self-loops ignored).
inline bool has_cycle(std::size_t n, const std::vector<Arc> &arcs) {
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto &[a, b] : arcs) {
        if (a != b) {
            out[a].push_back(b);
        }
    }
    std::vector<int> colour(n, 0);
    std::function<bool(std::size_t)> visit = [&](std::size_t u) {
        colour[u] = 1;
        for (std::size_t v : out[u]) {
            if (colour[v] == 1 || (colour[v] == 0 && visit(v))) {
                return true;
            }
        }
        colour[u] = 2;
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        if (colour[u] == 0 && visit(u)) {
            return true;
        }
    }
    return false;
}

inline std::vector<Arc> arcs_of(const Matrix &m) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i != j && m[i][j]) {
                arcs.emplace_back(i, j);
            }
        }
    }
    return arcs;
}

inline bool is_order(const Matrix &m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][i]) {
            return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m[i][j] && m[j][i]) {
                return false;
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (m[i][j] && m[j][k] && !m[i][k]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Random order: random DAG along a hidden permutation, then closure.
inline Matrix random_order(std::size_t n, double density, std::mt19937_64 &rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(density);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                arcs.emplace_back(perm[i], perm[j]);
            }
        }
    }
    return closure(n, arcs);
}

/// Every linear extension as a sequence, smallest first.
inline std::vector<std::vector<std::size_t>> linear_extensions(const Matrix &m) {
    const std::size_t n = m.size();
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> seq;
    std::vector<bool> used(n, false);
    std::function<void()> extend = [&] {
        if (seq.size() == n) {
            all.push_back(seq);
            return;
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (used[x]) {
                continue;
            }
            bool minimal = true;
            for (std::size_t y = 0; y < n && minimal; ++y) {
                minimal = used[y] || y == x || !m[y][x];
            }
            if (minimal) {
                used[x] = true;
                seq.push_back(x);
                extend();
                seq.pop_back();
                used[x] = false;
            }
        }
    };
    extend();
    return all;
}

/// Two linear extensions whose intersection is the order, by exhaustion.
inline bool dimension_at_most_two(const Matrix &m) {
    const std::size_t n = m.size();
    const auto all = linear_extensions(m);
    std::vector<std::vector<std::size_t>> ranks;
    for (const auto &seq : all) {
        std::vector<std::size_t> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            r[seq[i]] = i;
        }
        ranks.push_back(std::move(r));
    }
    std::vector<Arc> inc;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!m[a][b] && !m[b][a]) {
                inc.emplace_back(a, b);
            }
        }
    }
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        for (std::size_t j = i; j < ranks.size(); ++j) {
            bool realizes = true;
            for (const auto &[a, b] : inc) {
                if ((ranks[i][a] < ranks[i][b]) == (ranks[j][a] < ranks[j][b])) {
                    realizes = false;
                    break;
                }
            }
            if (realizes) {
                return true;
            }
        }
    }
    return false;
}

/// Ordered incomparable pairs in lexicographic order.
inline std::vector<Arc> incomparable(const Matrix &m) {
    std::vector<Arc> out;
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = 0; b < m.size(); ++b) {
            if (a != b && !m[a][b] && !m[b][a]) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

/// Incompatibility by definition: adding both pairs creates a cycle.
inline bool incompatible_by_cycle(const Matrix &m, Arc p, Arc q) {
    auto arcs = arcs_of(m);
    arcs.push_back(p);
    arcs.push_back(q);
    return has_cycle(m.size(), arcs);
}

/// Adjacency lists of a simple undirected graph.
using Adjacency = std::vector<std::vector<std::size_t>>;

inline bool bipartite_without(const Adjacency &adj, std::uint64_t removed_mask) {
    const std::size_t n = adj.size();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1 || ((removed_mask >> s) & 1U) != 0) {
            continue;
        }
        side[s] = 0;
        std::queue<std::size_t> queue;
        queue.push(s);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v : adj[u]) {
                if (((removed_mask >> v) & 1U) != 0) {
                    continue;
                }
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Minimum odd cycle transversal size by enumerating subsets in order of size.
inline std::size_t min_oct(const Adjacency &adj) {
    const std::size_t n = adj.size();
    for (std::size_t k = 0; k <= n; ++k) {
        // Gosper's hack over k-subsets of n bits.
        if (k == 0) {
            if (bipartite_without(adj, 0)) {
                return 0;
            }
            continue;
        }
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            if (bipartite_without(adj, mask)) {
                return k;
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return n;
}

inline Adjacency random_graph(std::size_t n, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(density);
    Adjacency adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

/// Smallest set C of incomparable pairs such that the order plus C is again
/// an order (no closure needed) of dimension at most two. Exhaustive; only for
/// tiny inputs. Returns the size, or SIZE_MAX if max_size is exceeded.
inline std::size_t min_two_dimension_extension(const Matrix &m, std::size_t max_size) {
    if (dimension_at_most_two(m)) {
        return 0;
    }
    const auto inc = incomparable(m);
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            Matrix ext = m;
            for (std::size_t i : pick) {
                ext[inc[i].first][inc[i].second] = true;
            }
            return is_order(ext) && dimension_at_most_two(ext);
        }
        for (std::size_t i = start; i < inc.size(); ++i) {
            pick.push_back(i);
            if (search(i + 1, left - 1)) {
                return true;
            }
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= max_size; ++k) {
        pick.clear();
        if (search(0, k)) {
            return k;
        }
    }
    return SIZE_MAX;
}

/// Exact rational collinearity on integer-scaled coordinates: p strictly
/// inside segment ab. Coordinates are numerator/denominator pairs scaled to a
/// common denominator by the caller.
inline bool strictly_between(std::int64_t px, std::int64_t py, std::int64_t ax, std::int64_t ay, std::int64_t bx,
                             std::int64_t by) {
    if ((bx - ax) * (py - ay) != (by - ay) * (px - ax)) {
        return false;
    }
    if (ax == bx && ay == by) {
        return false;
    }
    const bool in_x = std::min(ax, bx) <= px && px <= std::max(ax, bx);
    const bool in_y = std::min(ay, by) <= py && py <= std::max(ay, by);
    const bool endpoint = (px == ax && py == ay) || (px == bx && py == by);
    return in_x && in_y && !endpoint;
}

// Conversions to and from the library types.

inline Matrix from_order(const orderdraw::OrderRelation &o) {
    Matrix m(o.size(), std::vector<bool>(o.size(), false));
    for (std::size_t i = 0; i < o.size(); ++i) {
        for (std::size_t j = 0; j < o.size(); ++j) {
            m[i][j] = o.leq(i, j);
        }
    }
    return m;
}

inline orderdraw::OrderRelation to_order(const Matrix &m) {
    std::vector<std::string> labels;
    orderdraw::PairSet pairs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        labels.push_back("x" + std::to_string(i));
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i != j && m[i][j]) {
                pairs.emplace(i, j);
            }
        }
    }
    return orderdraw::OrderRelation::from_generators(orderdraw::GroundSet(labels), pairs);
}

inline orderdraw::SimpleGraph to_graph(const Adjacency &adj) {
    orderdraw::SimpleGraph g(adj.size());
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (std::size_t v : adj[u]) {
            if (u < v) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

inline Adjacency from_graph(const orderdraw::SimpleGraph &g) {
    Adjacency adj(g.vertex_count());
    for (const auto &[u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

} // namespace oracle
