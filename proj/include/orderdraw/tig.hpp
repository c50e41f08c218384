#pragma once

#include "orderdraw/graph.hpp"
#include "orderdraw/order.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace orderdraw {

/// An ordered incomparable pair (a, b) of some order.
struct IncPair {
    ElementId a;
    ElementId b;

    IncPair reversed() const noexcept { return {b, a}; }
    auto operator<=>(const IncPair &) const = default;
};

/// (c,d) lies in the transitive closure of <= u {(a,b)}, i.e. c <= a and
/// b <= d. Throws NotIncomparable.
bool enforces(IncPair p, IncPair q, const OrderRelation &order);

/// Inserting both pairs closes a cycle: for p = (a,b), q = (c,d) this holds
/// iff d <= a and b <= c. Throws NotIncomparable.
bool incompatible(IncPair p, IncPair q, const OrderRelation &order);

/// Transitive incompatibility graph: one vertex per incomparable ordered
/// pair, lexicographically ordered by (a, b); edges join incompatible pairs.
class TigGraph {
public:
    TigGraph() = default;
    TigGraph(std::vector<IncPair> vertices, SimpleGraph graph, std::size_t element_count);

    const SimpleGraph &graph() const noexcept { return graph_; }
    const std::vector<IncPair> &vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return graph_.edge_count(); }
    const IncPair &pair(VertexId v) const { return vertices_.at(v); }

    std::optional<VertexId> vertex_of(IncPair p) const;
    /// Vertex of the reversed pair; always present.
    VertexId reverse_of(VertexId v) const;

private:
    std::vector<IncPair> vertices_;
    SimpleGraph graph_;
    std::size_t element_count_ = 0;
    std::vector<VertexId> index_; // element_count^2 table, npos where comparable
};

TigGraph build_tig(const OrderRelation &order);

/// DOT text with vertices labelled "a,b" by element label.
std::string tig_to_dot(const TigGraph &tig, const OrderRelation &order);

} // namespace orderdraw
