#pragma once

#include "orderdraw/engine.hpp"
#include "orderdraw/rational.hpp"

#include <string>
#include <vector>

namespace orderdraw {

enum class LabelPlacement { Right, Above, None };

struct CanvasSpec {
    double unit = 40.0; // px per plane unit
    double margin = 30.0;
    double node_radius = 6.0;
    LabelPlacement labels = LabelPlacement::Right;
    double font_size = 12.0;

    /// Throws Error unless unit and radius are positive and margin, font size non-negative.
    void validate() const;
};

/// An element whose point lies strictly inside a cover edge it is not an
/// endpoint of.
struct Conflict {
    ElementId element;
    Pair edge;
    bool operator==(const Conflict &) const = default;
};

/// Exact test on the rational plane coordinates. Sorted by edge, then element.
std::vector<Conflict> detect_collinear(const GridDrawing &drawing);

/// Moves each conflicting point horizontally by +-epsilon, +-2 epsilon, ...
/// until it neither lies on an edge nor has an incident edge through another
/// point. Vertical coordinates and grid metadata are untouched. Throws
/// Unresolvable when conflicts remain after `max_rounds` rounds.
GridDrawing perturb(const GridDrawing &drawing, const std::vector<Conflict> &conflicts,
                    Rational epsilon = Rational(3, 20), std::size_t max_rounds = 16);

/// detect_collinear followed by perturb.
GridDrawing postprocess(const GridDrawing &drawing, Rational epsilon = Rational(3, 20));

std::string emit_svg(const GridDrawing &drawing, const CanvasSpec &spec = {});
std::string emit_tikz(const GridDrawing &drawing, const CanvasSpec &spec = {});
/// JSON dump: elements with grid and plane coordinates, cover edges,
/// extension pairs and per-pass statistics.
std::string emit_json(const GridDrawing &drawing, std::size_t false_comparabilities);
/// Graphviz digraph with pinned positions (neato -n).
std::string emit_dot(const GridDrawing &drawing, const CanvasSpec &spec = {});

} // namespace orderdraw
