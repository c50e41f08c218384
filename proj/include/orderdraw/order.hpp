#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orderdraw {

using ElementId = std::size_t;
using Pair = std::pair<ElementId, ElementId>;
using PairSet = std::set<Pair>;

/// C^-1 := {(a,b) | (b,a) in C}
PairSet reversed(const PairSet &pairs);

/// Ordered sequence of distinct labels with a dense id per label.
/// Ids follow insertion order.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    const std::string &label(ElementId id) const { return labels_.at(id); }
    const std::vector<std::string> &labels() const noexcept { return labels_; }

    std::optional<ElementId> find(std::string_view label) const;
    /// Throws UnknownLabel.
    ElementId id(std::string_view label) const;

    bool operator==(const GroundSet &other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ElementId> index_;
};

/// Dense square boolean matrix, row-major.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool value = true) { cells_[i * n_ + j] = value ? 1 : 0; }
    std::size_t count() const;

    /// Warshall closure in place.
    void close_transitively();

    bool operator==(const BoolMatrix &other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Reflexive, antisymmetric and transitive relation on a finite ground set.
/// Immutable after construction; every factory validates the three axioms.
class OrderRelation {
public:
    OrderRelation() = default;

    /// Reflexive-transitive closure of `generators`. Throws CycleError if the
    /// closure is not antisymmetric.
    static OrderRelation from_generators(GroundSet ground, PairSet generators);

    /// Adopts an already closed relation. Throws InvalidOrder if any axiom fails.
    static OrderRelation from_matrix(GroundSet ground, BoolMatrix leq, PairSet generators = {});

    std::size_t size() const noexcept { return ground_.size(); }
    const GroundSet &ground() const noexcept { return ground_; }
    const std::string &label(ElementId id) const { return ground_.label(id); }
    const PairSet &generators() const noexcept { return generators_; }
    const BoolMatrix &matrix() const noexcept { return leq_; }

    bool leq(ElementId a, ElementId b) const { return leq_(a, b); }
    bool less(ElementId a, ElementId b) const { return a != b && leq_(a, b); }
    bool comparable(ElementId a, ElementId b) const { return leq_(a, b) || leq_(b, a); }
    bool incomparable(ElementId a, ElementId b) const { return !comparable(a, b); }

    /// |{(a,b) : a <= b}|, diagonal included.
    std::size_t relation_size() const { return leq_.count(); }
    bool is_linear() const;

    /// Closure of this relation together with `extra`. Throws CycleError.
    OrderRelation extended(const PairSet &extra) const;

    bool operator==(const OrderRelation &other) const {
        return ground_ == other.ground_ && leq_ == other.leq_;
    }

private:
    OrderRelation(GroundSet ground, BoolMatrix leq, PairSet generators)
        : ground_(std::move(ground)), leq_(std::move(leq)), generators_(std::move(generators)) {}

    GroundSet ground_;
    BoolMatrix leq_;
    PairSet generators_;
};

/// True iff `m` is reflexive, antisymmetric and transitive.
bool is_valid_order(const BoolMatrix &m);

/// Label-level entry point. Throws UnknownLabel, CycleError.
OrderRelation build_order(const std::vector<std::string> &labels,
                          const std::vector<std::pair<std::string, std::string>> &pairs);
OrderRelation build_order(GroundSet ground, PairSet pairs);

/// Pairs a < b with no c strictly between them.
PairSet cover_relation(const OrderRelation &order);

/// All ordered pairs (a,b), a != b, with a and b incomparable.
PairSet incomparable_pairs(const OrderRelation &order);

/// A total order on the ground set, with rank(x) = |{y : y < x}|.
class LinearExtension {
public:
    /// Throws NotLinear.
    static LinearExtension from_order(OrderRelation order);
    /// `sequence` lists every element once, smallest first.
    static LinearExtension from_sequence(GroundSet ground, const std::vector<ElementId> &sequence);

    const OrderRelation &order() const noexcept { return order_; }
    std::size_t rank(ElementId x) const { return rank_.at(x); }
    /// Elements from smallest to largest.
    const std::vector<ElementId> &sequence() const noexcept { return sequence_; }

    /// True iff `base` is contained in this total order.
    bool extends(const OrderRelation &base) const;

private:
    LinearExtension(OrderRelation order, std::vector<std::size_t> rank, std::vector<ElementId> sequence)
        : order_(std::move(order)), rank_(std::move(rank)), sequence_(std::move(sequence)) {}

    OrderRelation order_;
    std::vector<std::size_t> rank_;
    std::vector<ElementId> sequence_;
};

/// Intersection of the given total orders. Throws GroundMismatch, or Error on
/// an empty family.
OrderRelation intersect_linear(std::span<const LinearExtension> extensions);

namespace generators {

/// a_i < b_j iff i != j; labels a1..an, b1..bn.
OrderRelation standard_example(std::size_t n);
/// Subsets of {1..n} ordered by inclusion. Element ids are bitmasks.
OrderRelation boolean_lattice(std::size_t n);
OrderRelation chain(std::size_t n);
OrderRelation antichain(std::size_t n);
/// Product of a chain of length m and a chain of length n.
OrderRelation grid(std::size_t m, std::size_t n);

} // namespace generators

} // namespace orderdraw
