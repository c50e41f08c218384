#pragma once

#include "orderdraw/order.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace orderdraw {

/// Contents of an order file: labels in declaration/appearance order and the
/// generating pairs.
struct OrderText {
    GroundSet ground;
    PairSet pairs;
};

/// Line-based order format:
///
///     # comment
///     elements: a b c
///     a < b
///
/// Undeclared labels are registered when first seen. Throws ParseError.
OrderText parse_order_text(std::string_view text);

/// parse_order_text followed by closure. Cycles surface as ParseError on the
/// last line.
OrderRelation read_order_text(std::string_view text);

/// Writes the ground set and cover pairs in the format above. Throws Error for
/// labels that cannot be written (empty, whitespace, '<' or '#').
std::string serialize_order(const OrderRelation &order);

/// Objects x attributes incidence table.
class FormalContext {
public:
    FormalContext() = default;
    /// Throws Error on size mismatch or duplicate labels.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<std::vector<bool>> incidence);

    const std::vector<std::string> &objects() const noexcept { return objects_; }
    const std::vector<std::string> &attributes() const noexcept { return attributes_; }
    bool has(std::size_t object, std::size_t attribute) const { return incidence_.at(object).at(attribute); }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<std::vector<bool>> incidence_;
};

/// Burmeister .cxt: "B", optional name line, object count, attribute count,
/// labels, then one row of '.'/'X' per object. Throws ParseError.
FormalContext parse_cxt(std::string_view text);
std::string serialize_cxt(const FormalContext &context);

/// All formal concepts ordered by extent inclusion. Elements are labelled by
/// their extent, e.g. "{o1,o3}", and sorted by extent size then lectically.
/// Throws TooLarge once more than `max_concepts` concepts exist.
OrderRelation concept_lattice(const FormalContext &context, std::size_t max_concepts = std::size_t{1} << 14);

} // namespace orderdraw
