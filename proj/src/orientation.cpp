#include "orderdraw/orientation.hpp"

#include "orderdraw/errors.hpp"

#include <deque>

namespace orderdraw {

SimpleGraph cocomparability_graph(const OrderRelation &order) {
    SimpleGraph g(order.size());
    for (ElementId a = 0; a < order.size(); ++a) {
        for (ElementId b = a + 1; b < order.size(); ++b) {
            if (order.incomparable(a, b)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

SimpleGraph comparability_graph(const OrderRelation &order) {
    SimpleGraph g(order.size());
    for (ElementId a = 0; a < order.size(); ++a) {
        for (ElementId b = a + 1; b < order.size(); ++b) {
            if (order.comparable(a, b)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

std::optional<Orientation> transitive_orientation(const SimpleGraph &g) {
    const std::size_t n = g.vertex_count();
    // remaining: edges not yet assigned to an implication class.
    // in_class(u,v): u -> v belongs to the class currently being grown.
    BoolMatrix remaining(n);
    BoolMatrix in_class(n);
    for (const auto &[u, v] : g.edges()) {
        remaining.set(u, v);
        remaining.set(v, u);
    }

    Orientation result;
    for (const auto &[seed_u, seed_v] : g.edges()) {
        if (!remaining(seed_u, seed_v)) {
            continue;
        }
        std::vector<Edge> members;
        std::deque<Edge> queue;
        bool conflict = false;

        auto force = [&](VertexId u, VertexId v) {
            if (in_class(v, u)) {
                conflict = true;
                return;
            }
            if (!in_class(u, v)) {
                in_class.set(u, v);
                members.emplace_back(u, v);
                queue.emplace_back(u, v);
            }
        };

        force(seed_u, seed_v);
        while (!queue.empty() && !conflict) {
            const auto [x, y] = queue.front();
            queue.pop_front();
            // x -> y forces x -> z when z is adjacent to x but not to y, and
            // z -> y when z is adjacent to y but not to x (adjacency taken in
            // the remaining edge set).
            for (VertexId z : g.neighbors(x)) {
                if (z != y && remaining(x, z) && !remaining(y, z)) {
                    force(x, z);
                }
            }
            for (VertexId z : g.neighbors(y)) {
                if (z != x && remaining(z, y) && !remaining(x, z)) {
                    force(z, y);
                }
            }
        }
        if (conflict) {
            return std::nullopt;
        }
        for (const auto &[u, v] : members) {
            remaining.set(u, v, false);
            remaining.set(v, u, false);
            in_class.set(u, v, false);
            result.arcs.emplace(u, v);
        }
    }

    if (!verify_orientation(g, result)) {
        return std::nullopt;
    }
    return result;
}

bool verify_orientation(const SimpleGraph &g, const Orientation &d) {
    const std::size_t n = g.vertex_count();
    if (d.arcs.size() != g.edge_count()) {
        throw EdgeMismatch("orientation has " + std::to_string(d.arcs.size()) + " arcs for " +
                           std::to_string(g.edge_count()) + " edges");
    }
    BoolMatrix arc(n);
    for (const auto &[u, v] : d.arcs) {
        if (u >= n || v >= n || u == v || !g.has_edge(u, v)) {
            throw EdgeMismatch("arc does not correspond to an edge");
        }
        if (arc(v, u)) {
            throw EdgeMismatch("edge oriented in both directions");
        }
        arc.set(u, v);
    }
    for (const auto &[a, b] : d.arcs) {
        for (VertexId c : g.neighbors(b)) {
            if (arc(b, c) && !arc(a, c)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<OrderRelation> compute_conjugate_order(const OrderRelation &order) {
    auto orientation = transitive_orientation(cocomparability_graph(order));
    if (!orientation) {
        return std::nullopt;
    }
    BoolMatrix m(order.size());
    for (ElementId i = 0; i < order.size(); ++i) {
        m.set(i, i);
    }
    for (const auto &[u, v] : orientation->arcs) {
        m.set(u, v);
    }
    return OrderRelation::from_matrix(order.ground(), std::move(m), orientation->arcs);
}

std::pair<LinearExtension, LinearExtension> realizer_from_conjugate(const OrderRelation &order,
                                                                    const OrderRelation &conjugate) {
    if (!(order.ground() == conjugate.ground())) {
        throw GroundMismatch();
    }
    const std::size_t n = order.size();
    BoolMatrix up = order.matrix();
    BoolMatrix down = order.matrix();
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
            if (conjugate.leq(a, b)) {
                up.set(a, b);
                down.set(b, a);
            }
        }
    }
    auto to_linear = [&](BoolMatrix m) {
        if (!is_valid_order(m)) {
            throw NotLinear("union with the conjugate is not an order");
        }
        return LinearExtension::from_order(OrderRelation::from_matrix(order.ground(), std::move(m)));
    };
    return {to_linear(std::move(up)), to_linear(std::move(down))};
}

} // namespace orderdraw
