#include "orderdraw/tig.hpp"

#include "orderdraw/errors.hpp"

#include <limits>
#include <sstream>

namespace orderdraw {

namespace {

constexpr VertexId npos = std::numeric_limits<VertexId>::max();

void require_incomparable(IncPair p, const OrderRelation &order) {
    if (p.a >= order.size() || p.b >= order.size() || p.a == p.b || order.comparable(p.a, p.b)) {
        throw NotIncomparable("pair is not an incomparable pair of the order");
    }
}

std::string dot_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

} // namespace

bool enforces(IncPair p, IncPair q, const OrderRelation &order) {
    require_incomparable(p, order);
    require_incomparable(q, order);
    return order.leq(q.a, p.a) && order.leq(p.b, q.b);
}

bool incompatible(IncPair p, IncPair q, const OrderRelation &order) {
    require_incomparable(p, order);
    require_incomparable(q, order);
    return order.leq(q.b, p.a) && order.leq(p.b, q.a);
}

TigGraph::TigGraph(std::vector<IncPair> vertices, SimpleGraph graph, std::size_t element_count)
    : vertices_(std::move(vertices)), graph_(std::move(graph)), element_count_(element_count),
      index_(element_count * element_count, npos) {
    for (VertexId v = 0; v < vertices_.size(); ++v) {
        index_[vertices_[v].a * element_count_ + vertices_[v].b] = v;
    }
}

std::optional<VertexId> TigGraph::vertex_of(IncPair p) const {
    if (p.a >= element_count_ || p.b >= element_count_) {
        return std::nullopt;
    }
    const VertexId v = index_[p.a * element_count_ + p.b];
    if (v == npos) {
        return std::nullopt;
    }
    return v;
}

VertexId TigGraph::reverse_of(VertexId v) const {
    const IncPair r = pair(v).reversed();
    return index_[r.a * element_count_ + r.b];
}

TigGraph build_tig(const OrderRelation &order) {
    std::vector<IncPair> vertices;
    for (const auto &[a, b] : incomparable_pairs(order)) {
        vertices.push_back({a, b});
    }
    SimpleGraph graph(vertices.size());
    for (VertexId u = 0; u < vertices.size(); ++u) {
        const IncPair p = vertices[u];
        for (VertexId v = u + 1; v < vertices.size(); ++v) {
            const IncPair q = vertices[v];
            // Symmetric in p and q: d <= a and b <= c.
            if (order.leq(q.b, p.a) && order.leq(p.b, q.a)) {
                graph.add_edge(u, v);
            }
        }
    }
    return TigGraph(std::move(vertices), std::move(graph), order.size());
}

std::string tig_to_dot(const TigGraph &tig, const OrderRelation &order) {
    std::ostringstream out;
    out << "graph tig {\n";
    for (VertexId v = 0; v < tig.vertex_count(); ++v) {
        const IncPair p = tig.pair(v);
        out << "  v" << v << " [label=\"" << dot_escape(order.label(p.a)) << ","
            << dot_escape(order.label(p.b)) << "\"];\n";
    }
    for (const auto &[u, v] : tig.graph().edges()) {
        out << "  v" << u << " -- v" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace orderdraw
