#include "orderdraw/engine.hpp"

#include "orderdraw/errors.hpp"
#include "orderdraw/orientation.hpp"

namespace orderdraw {

std::string to_string(Strategy strategy) {
    switch (strategy) {
    case Strategy::Sat:
        return "sat";
    case Strategy::Greedy:
        return "greedy";
    case Strategy::Anneal:
        return "anneal";
    case Strategy::Genetic:
        return "genetic";
    case Strategy::Brute:
        return "brute";
    }
    return "unknown";
}

Strategy parse_strategy(const std::string &name) {
    for (Strategy s : {Strategy::Sat, Strategy::Greedy, Strategy::Anneal, Strategy::Genetic, Strategy::Brute}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw Error("unknown strategy '" + name + "'");
}

Bipartizer make_bipartizer(const StrategyConfig &config) {
    return [config](const TigGraph &tig, std::size_t pass) -> OctResult {
        const SimpleGraph &g = tig.graph();
        switch (config.strategy) {
        case Strategy::Sat:
            return min_oct_exact(g, config.k_search, config.backend);
        case Strategy::Greedy:
            return oct_greedy(g);
        case Strategy::Anneal:
            return oct_anneal(g, config.seed + pass, config.anneal);
        case Strategy::Genetic:
            return oct_genetic(g, config.seed + pass, config.genetic);
        case Strategy::Brute:
            return brute_force_oct(g, config.brute_limit);
        }
        throw Error("unknown strategy");
    };
}

namespace {

std::string describe(const OrderRelation &order, const PairSet &pairs) {
    std::string out;
    for (const auto &[a, b] : pairs) {
        out += " (" + order.label(a) + "," + order.label(b) + ")";
    }
    return out;
}

} // namespace

ExtensionTrace two_dimension_extension(const OrderRelation &order, const Bipartizer &bipartizer) {
    ExtensionTrace trace;
    OrderRelation current = order;
    auto conjugate = compute_conjugate_order(current);
    const std::size_t pass_limit = incomparable_pairs(order).size() / 2 + 1;

    while (!conjugate) {
        if (trace.passes >= pass_limit) {
            throw Error("extension did not converge within " + std::to_string(pass_limit) +
                        " passes; C =" + describe(order, trace.extension));
        }
        const TigGraph tig = build_tig(current);
        const OctResult chosen = bipartizer(tig, trace.passes);
        if (chosen.removed.empty() || !is_transversal(tig.graph(), chosen.removed)) {
            throw Error("bipartization strategy returned a set that does not make the graph bipartite");
        }

        PassRecord record;
        record.tig_vertices = tig.vertex_count();
        record.tig_edges = tig.edge_count();
        record.method = chosen.method;
        record.optimal = chosen.optimal;
        PairSet added;
        for (VertexId v : chosen.removed) {
            const IncPair p = tig.pair(v);
            record.removed.push_back(p);
            added.emplace(p.b, p.a);
        }
        for (const auto &[x, y] : added) {
            if (added.count({y, x}) != 0 || trace.extension.count({y, x}) != 0) {
                throw OrderViolation("extension would contain both (" + order.label(x) + "," + order.label(y) +
                                     ") and its reverse");
            }
        }
        trace.extension.insert(added.begin(), added.end());

        OrderRelation next;
        try {
            next = order.extended(trace.extension);
        } catch (const CycleError &e) {
            throw OrderViolation(std::string("extended relation is not antisymmetric: ") + e.what());
        }
        // <= u C must be transitive as it stands; closure may not add pairs.
        if (next.relation_size() != current.relation_size() + added.size()) {
            throw OrderViolation("order extended by" + describe(order, added) + " is not transitive");
        }
        current = std::move(next);
        trace.pass_log.push_back(std::move(record));
        ++trace.passes;
        conjugate = compute_conjugate_order(current);
    }
    trace.extended = std::move(current);
    trace.conjugate = std::move(*conjugate);
    return trace;
}

ExtensionTrace two_dimension_extension(const OrderRelation &order, const StrategyConfig &config) {
    return two_dimension_extension(order, make_bipartizer(config));
}

GridDrawing compute_coordinates(const OrderRelation &order, const Bipartizer &bipartizer) {
    GridDrawing drawing;
    drawing.extension = two_dimension_extension(order, bipartizer);
    const auto [first, second] = realizer_from_conjugate(drawing.extension.extended, drawing.extension.conjugate);
    const std::size_t n = order.size();
    drawing.labels = order.ground().labels();
    drawing.grid.resize(n);
    drawing.plane.resize(n);
    for (ElementId x = 0; x < n; ++x) {
        const auto c1 = static_cast<std::int64_t>(first.rank(x));
        const auto c2 = static_cast<std::int64_t>(second.rank(x));
        drawing.grid[x] = {first.rank(x), second.rank(x)};
        drawing.plane[x] = {Rational(c2 - c1), Rational(c1 + c2)};
    }
    drawing.cover_edges = cover_relation(order);
    return drawing;
}

GridDrawing compute_coordinates(const OrderRelation &order, const StrategyConfig &config) {
    return compute_coordinates(order, make_bipartizer(config));
}

DominanceReport weak_dominance_stats(const GridDrawing &drawing, const OrderRelation &order) {
    DominanceReport report;
    report.extension_pairs = drawing.extension.extension.size();
    for (ElementId a = 0; a < order.size(); ++a) {
        for (ElementId b = 0; b < order.size(); ++b) {
            if (a == b || !order.incomparable(a, b)) {
                continue;
            }
            const GridPoint &pa = drawing.grid.at(a);
            const GridPoint &pb = drawing.grid.at(b);
            if (pa.c1 < pb.c1 && pa.c2 < pb.c2) {
                ++report.false_comparabilities;
            }
        }
    }
    return report;
}

} // namespace orderdraw
