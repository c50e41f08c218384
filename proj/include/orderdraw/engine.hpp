#pragma once

#include "orderdraw/oct.hpp"
#include "orderdraw/order.hpp"
#include "orderdraw/rational.hpp"
#include "orderdraw/tig.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace orderdraw {

/// Chooses the vertices to delete from an incompatibility graph so that the
/// rest is bipartite. `pass` counts extension rounds from 0.
using Bipartizer = std::function<OctResult(const TigGraph &tig, std::size_t pass)>;

enum class Strategy { Sat, Greedy, Anneal, Genetic, Brute };
std::string to_string(Strategy strategy);
/// Throws Error on an unknown name.
Strategy parse_strategy(const std::string &name);

struct StrategyConfig {
    Strategy strategy = Strategy::Sat;
    SatBackend backend;
    KSearch k_search = KSearch::Linear;
    std::uint64_t seed = 0; // heuristics use seed + pass
    AnnealParams anneal;
    GeneticParams genetic;
    std::size_t brute_limit = 20;
};

Bipartizer make_bipartizer(const StrategyConfig &config);

struct PassRecord {
    std::size_t tig_vertices = 0;
    std::size_t tig_edges = 0;
    std::vector<IncPair> removed;
    OctMethod method = OctMethod::SatExact;
    bool optimal = false;
};

/// Result of extending an order until it has dimension at most two.
struct ExtensionTrace {
    PairSet extension; // C: pairs added to the order
    std::size_t passes = 0;
    std::vector<PassRecord> pass_log;
    OrderRelation extended;  // <= u C, transitively closed
    OrderRelation conjugate; // a conjugate order of `extended`
};

/// Bipartizes the incompatibility graph, adds the reversed removed pairs to
/// C and retries until a conjugate order exists. After every pass <= u C
/// must already be an order and C must not contain a pair together with its
/// reverse; otherwise OrderViolation is thrown.
ExtensionTrace two_dimension_extension(const OrderRelation &order, const Bipartizer &bipartizer);
ExtensionTrace two_dimension_extension(const OrderRelation &order, const StrategyConfig &config = {});

struct GridPoint {
    std::size_t c1 = 0;
    std::size_t c2 = 0;
    bool operator==(const GridPoint &) const = default;
};

struct PlanePoint {
    Rational x;
    Rational y;
    bool operator==(const PlanePoint &) const = default;
};

/// Dominance drawing of an order. `grid` holds the ranks in the two linear
/// extensions, `plane` the embedding c1*(-1,1) + c2*(1,1). Cover edges belong
/// to the original order.
struct GridDrawing {
    std::vector<std::string> labels;
    std::vector<GridPoint> grid;
    std::vector<PlanePoint> plane;
    PairSet cover_edges;
    ExtensionTrace extension;
};

GridDrawing compute_coordinates(const OrderRelation &order, const Bipartizer &bipartizer);
GridDrawing compute_coordinates(const OrderRelation &order, const StrategyConfig &config = {});

struct DominanceReport {
    /// Ordered pairs incomparable in the order but dominance-comparable in the grid.
    std::size_t false_comparabilities = 0;
    std::size_t extension_pairs = 0;
};

DominanceReport weak_dominance_stats(const GridDrawing &drawing, const OrderRelation &order);

} // namespace orderdraw
