#pragma once

#include "orderdraw/graph.hpp"
#include "orderdraw/order.hpp"

#include <optional>
#include <utility>

namespace orderdraw {

/// One direction for every edge of a graph: (u, v) means u -> v.
struct Orientation {
    PairSet arcs;
};

/// {a,b} is an edge iff a and b are incomparable.
SimpleGraph cocomparability_graph(const OrderRelation &order);
/// {a,b} is an edge iff a < b or b < a.
SimpleGraph comparability_graph(const OrderRelation &order);

/// Transitive orientation by implication-class forcing on a shrinking edge
/// set. Returns nullopt when `g` is not a comparability graph. Unoriented
/// edges are seeded lexicographically, low id -> high id.
std::optional<Orientation> transitive_orientation(const SimpleGraph &g);

/// True iff `d` is transitive (hence acyclic). Throws EdgeMismatch unless
/// `d` orients every edge of `g` exactly once and nothing else.
bool verify_orientation(const SimpleGraph &g, const Orientation &d);

/// An order whose comparability graph is the cocomparability graph of
/// `order`, or nullopt when the dimension exceeds two.
std::optional<OrderRelation> compute_conjugate_order(const OrderRelation &order);

/// Realizer {<= u <=_C, <= u >=_C}. Throws NotLinear if `conjugate` is not
/// conjugate to `order`, GroundMismatch on different ground sets.
std::pair<LinearExtension, LinearExtension> realizer_from_conjugate(const OrderRelation &order,
                                                                    const OrderRelation &conjugate);

inline bool is_two_dimensional(const OrderRelation &order) {
    return compute_conjugate_order(order).has_value();
}

} // namespace orderdraw
