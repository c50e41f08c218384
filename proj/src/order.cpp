#include "orderdraw/order.hpp"

#include "orderdraw/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace orderdraw {

CycleError::CycleError(std::vector<std::string> witness)
    : Error([&] {
          std::string msg = "relation contains a cycle:";
          for (const auto &label : witness) {
              msg += " " + label + " <";
          }
          if (!witness.empty()) {
              msg += " " + witness.front();
          }
          return msg;
      }()),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, std::string reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(std::move(reason)) {}

PairSet reversed(const PairSet &pairs) {
    PairSet out;
    for (const auto &[a, b] : pairs) {
        out.emplace(b, a);
    }
    return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (ElementId i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second) {
            throw Error("duplicate element label '" + labels_[i] + "'");
        }
    }
}

std::optional<ElementId> GroundSet::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

ElementId GroundSet::id(std::string_view label) const {
    if (auto found = find(label)) {
        return *found;
    }
    throw UnknownLabel(std::string(label));
}

std::size_t BoolMatrix::count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

void BoolMatrix::close_transitively() {
    for (std::size_t k = 0; k < n_; ++k) {
        const std::uint8_t *row_k = &cells_[k * n_];
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == k || cells_[i * n_ + k] == 0) {
                continue;
            }
            std::uint8_t *row_i = &cells_[i * n_];
            for (std::size_t j = 0; j < n_; ++j) {
                row_i[j] |= row_k[j];
            }
        }
    }
}

bool is_valid_order(const BoolMatrix &m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, i)) {
            return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m(i, j) && m(j, i)) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!m(i, k)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (m(k, j) && !m(i, j)) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Shortest path from `from` to `to` along the given arcs, both endpoints included.
std::vector<ElementId> find_path(std::size_t n, const std::vector<std::vector<ElementId>> &out,
                                 ElementId from, ElementId to) {
    std::vector<ElementId> parent(n, n);
    std::queue<ElementId> queue;
    parent[from] = from;
    queue.push(from);
    while (!queue.empty()) {
        const ElementId u = queue.front();
        queue.pop();
        if (u == to) {
            break;
        }
        for (ElementId v : out[u]) {
            if (parent[v] == n) {
                parent[v] = u;
                queue.push(v);
            }
        }
    }
    std::vector<ElementId> path;
    for (ElementId v = to; v != from; v = parent[v]) {
        path.push_back(v);
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

[[noreturn]] void throw_cycle(const GroundSet &ground, const std::vector<Pair> &arcs, ElementId a,
                              ElementId b) {
    std::vector<std::vector<ElementId>> out(ground.size());
    for (const auto &[x, y] : arcs) {
        if (x != y) {
            out[x].push_back(y);
        }
    }
    auto there = find_path(ground.size(), out, a, b);
    auto back = find_path(ground.size(), out, b, a);
    std::vector<std::string> witness;
    for (std::size_t i = 0; i + 1 < there.size(); ++i) {
        witness.push_back(ground.label(there[i]));
    }
    for (std::size_t i = 0; i + 1 < back.size(); ++i) {
        witness.push_back(ground.label(back[i]));
    }
    throw CycleError(std::move(witness));
}

BoolMatrix close_or_throw(const GroundSet &ground, BoolMatrix m, const std::vector<Pair> &arcs) {
    const std::size_t n = ground.size();
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    m.close_transitively();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m(i, j) && m(j, i)) {
                throw_cycle(ground, arcs, i, j);
            }
        }
    }
    return m;
}

} // namespace

OrderRelation OrderRelation::from_generators(GroundSet ground, PairSet generators) {
    const std::size_t n = ground.size();
    BoolMatrix m(n);
    std::vector<Pair> arcs;
    for (const auto &[a, b] : generators) {
        if (a >= n || b >= n) {
            throw Error("generator pair references an element outside the ground set");
        }
        m.set(a, b);
        arcs.emplace_back(a, b);
    }
    BoolMatrix closed = close_or_throw(ground, std::move(m), arcs);
    return OrderRelation(std::move(ground), std::move(closed), std::move(generators));
}

OrderRelation OrderRelation::from_matrix(GroundSet ground, BoolMatrix leq, PairSet generators) {
    if (leq.size() != ground.size()) {
        throw InvalidOrder("matrix dimension does not match the ground set");
    }
    if (!is_valid_order(leq)) {
        throw InvalidOrder("relation is not reflexive, antisymmetric and transitive");
    }
    return OrderRelation(std::move(ground), std::move(leq), std::move(generators));
}

bool OrderRelation::is_linear() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (!comparable(i, j)) {
                return false;
            }
        }
    }
    return true;
}

OrderRelation OrderRelation::extended(const PairSet &extra) const {
    const std::size_t n = size();
    BoolMatrix m = leq_;
    std::vector<Pair> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq_(i, j)) {
                arcs.emplace_back(i, j);
            }
        }
    }
    PairSet generators = generators_;
    for (const auto &[a, b] : extra) {
        if (a >= n || b >= n) {
            throw Error("extension pair references an element outside the ground set");
        }
        m.set(a, b);
        arcs.emplace_back(a, b);
        generators.emplace(a, b);
    }
    BoolMatrix closed = close_or_throw(ground_, std::move(m), arcs);
    return OrderRelation(ground_, std::move(closed), std::move(generators));
}

OrderRelation build_order(GroundSet ground, PairSet pairs) {
    if (ground.empty()) {
        throw Error("an ordered set needs at least one element");
    }
    return OrderRelation::from_generators(std::move(ground), std::move(pairs));
}

OrderRelation build_order(const std::vector<std::string> &labels,
                          const std::vector<std::pair<std::string, std::string>> &pairs) {
    GroundSet ground(labels);
    PairSet ids;
    for (const auto &[a, b] : pairs) {
        ids.emplace(ground.id(a), ground.id(b));
    }
    return build_order(std::move(ground), std::move(ids));
}

PairSet cover_relation(const OrderRelation &order) {
    const std::size_t n = order.size();
    PairSet covers;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!order.less(a, b)) {
                continue;
            }
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c) {
                direct = !(order.less(a, c) && order.less(c, b));
            }
            if (direct) {
                covers.emplace(a, b);
            }
        }
    }
    return covers;
}

PairSet incomparable_pairs(const OrderRelation &order) {
    const std::size_t n = order.size();
    PairSet inc;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && order.incomparable(a, b)) {
                inc.emplace(a, b);
            }
        }
    }
    return inc;
}

LinearExtension LinearExtension::from_order(OrderRelation order) {
    if (!order.is_linear()) {
        throw NotLinear("relation is not a total order");
    }
    const std::size_t n = order.size();
    std::vector<std::size_t> rank(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (order.less(y, x)) {
                ++rank[x];
            }
        }
    }
    std::vector<ElementId> sequence(n);
    for (std::size_t x = 0; x < n; ++x) {
        sequence[rank[x]] = x;
    }
    return LinearExtension(std::move(order), std::move(rank), std::move(sequence));
}

LinearExtension LinearExtension::from_sequence(GroundSet ground, const std::vector<ElementId> &sequence) {
    const std::size_t n = ground.size();
    if (sequence.size() != n) {
        throw NotLinear("sequence does not list every element exactly once");
    }
    std::vector<bool> seen(n, false);
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sequence[i] >= n || seen[sequence[i]]) {
            throw NotLinear("sequence does not list every element exactly once");
        }
        seen[sequence[i]] = true;
        for (std::size_t j = i; j < n; ++j) {
            m.set(sequence[i], sequence[j]);
        }
    }
    return from_order(OrderRelation::from_matrix(std::move(ground), std::move(m)));
}

bool LinearExtension::extends(const OrderRelation &base) const {
    if (!(base.ground() == order_.ground())) {
        return false;
    }
    for (std::size_t a = 0; a < base.size(); ++a) {
        for (std::size_t b = 0; b < base.size(); ++b) {
            if (base.leq(a, b) && !order_.leq(a, b)) {
                return false;
            }
        }
    }
    return true;
}

OrderRelation intersect_linear(std::span<const LinearExtension> extensions) {
    if (extensions.empty()) {
        throw Error("cannot intersect an empty family of linear extensions");
    }
    const GroundSet &ground = extensions.front().order().ground();
    BoolMatrix m = extensions.front().order().matrix();
    for (const auto &ext : extensions.subspan(1)) {
        if (!(ext.order().ground() == ground)) {
            throw GroundMismatch();
        }
        const BoolMatrix &other = ext.order().matrix();
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (m(i, j) && !other(i, j)) {
                    m.set(i, j, false);
                }
            }
        }
    }
    return OrderRelation::from_matrix(ground, std::move(m));
}

namespace generators {

namespace {

std::vector<std::string> numbered(std::string_view prefix, std::size_t n, std::size_t first = 0) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::string(prefix) + std::to_string(i + first));
    }
    return labels;
}

} // namespace

OrderRelation standard_example(std::size_t n) {
    auto labels = numbered("a", n, 1);
    auto upper = numbered("b", n, 1);
    labels.insert(labels.end(), upper.begin(), upper.end());
    PairSet pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                pairs.emplace(i, n + j);
            }
        }
    }
    return build_order(GroundSet(std::move(labels)), std::move(pairs));
}

OrderRelation boolean_lattice(std::size_t n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t mask = 0; mask < size; ++mask) {
        std::string label = "{";
        for (std::size_t bit = 0; bit < n; ++bit) {
            if (mask & (std::size_t{1} << bit)) {
                if (label.size() > 1) {
                    label += ",";
                }
                label += std::to_string(bit + 1);
            }
        }
        labels.push_back(label + "}");
    }
    PairSet pairs;
    for (std::size_t mask = 0; mask < size; ++mask) {
        for (std::size_t bit = 0; bit < n; ++bit) {
            if (!(mask & (std::size_t{1} << bit))) {
                pairs.emplace(mask, mask | (std::size_t{1} << bit));
            }
        }
    }
    return build_order(GroundSet(std::move(labels)), std::move(pairs));
}

OrderRelation chain(std::size_t n) {
    PairSet pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        pairs.emplace(i, i + 1);
    }
    return build_order(GroundSet(numbered("c", n)), std::move(pairs));
}

OrderRelation antichain(std::size_t n) {
    return build_order(GroundSet(numbered("e", n)), {});
}

OrderRelation grid(std::size_t m, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    PairSet pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i + 1 < m) {
                pairs.emplace(i * n + j, (i + 1) * n + j);
            }
            if (j + 1 < n) {
                pairs.emplace(i * n + j, i * n + j + 1);
            }
        }
    }
    return build_order(GroundSet(std::move(labels)), std::move(pairs));
}

} // namespace generators

} // namespace orderdraw
