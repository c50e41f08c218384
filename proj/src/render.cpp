#include "orderdraw/render.hpp"

#include "orderdraw/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

namespace orderdraw {

void CanvasSpec::validate() const {
    if (!(unit > 0.0) || !(node_radius > 0.0)) {
        throw Error("canvas unit and node radius must be positive");
    }
    if (margin < 0.0 || font_size < 0.0) {
        throw Error("canvas margin and font size must be non-negative");
    }
}

namespace {

bool on_open_segment(const PlanePoint &p, const PlanePoint &a, const PlanePoint &b) {
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    const Rational px = p.x - a.x;
    const Rational py = p.y - a.y;
    if (dx * py - dy * px != Rational(0)) {
        return false;
    }
    const Rational dot = px * dx + py * dy;
    const Rational length2 = dx * dx + dy * dy;
    return Rational(0) < dot && dot < length2;
}

// Conflicts involving element p either as the point or as an edge endpoint.
bool clear_of_conflicts(const GridDrawing &d, ElementId p) {
    for (ElementId q = 0; q < d.plane.size(); ++q) {
        if (q != p && d.plane[q] == d.plane[p]) {
            return false;
        }
    }
    for (const auto &[a, b] : d.cover_edges) {
        if (a != p && b != p) {
            if (on_open_segment(d.plane[p], d.plane[a], d.plane[b])) {
                return false;
            }
            continue;
        }
        for (ElementId r = 0; r < d.plane.size(); ++r) {
            if (r != a && r != b && on_open_segment(d.plane[r], d.plane[a], d.plane[b])) {
                return false;
            }
        }
    }
    return true;
}

std::string number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    std::string s = buffer;
    while (!s.empty() && s.back() == '0') {
        s.pop_back();
    }
    if (!s.empty() && s.back() == '.') {
        s.pop_back();
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string tex_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '{':
        case '}':
        case '_':
        case '#':
        case '$':
        case '%':
        case '&':
            out += '\\';
            out += c;
            break;
        case '\\':
            out += "\\textbackslash{}";
            break;
        case '^':
            out += "\\textasciicircum{}";
            break;
        case '~':
            out += "\\textasciitilde{}";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct Bounds {
    double min_x = 0.0;
    double max_x = 0.0;
    double min_y = 0.0;
    double max_y = 0.0;
};

Bounds bounds_of(const GridDrawing &d) {
    Bounds b;
    if (d.plane.empty()) {
        return b;
    }
    b.min_x = b.min_y = std::numeric_limits<double>::max();
    b.max_x = b.max_y = std::numeric_limits<double>::lowest();
    for (const auto &p : d.plane) {
        b.min_x = std::min(b.min_x, p.x.to_double());
        b.max_x = std::max(b.max_x, p.x.to_double());
        b.min_y = std::min(b.min_y, p.y.to_double());
        b.max_y = std::max(b.max_y, p.y.to_double());
    }
    return b;
}

} // namespace

std::vector<Conflict> detect_collinear(const GridDrawing &drawing) {
    std::vector<Conflict> conflicts;
    for (const auto &edge : drawing.cover_edges) {
        const auto &[a, b] = edge;
        for (ElementId p = 0; p < drawing.plane.size(); ++p) {
            if (p != a && p != b && on_open_segment(drawing.plane[p], drawing.plane[a], drawing.plane[b])) {
                conflicts.push_back({p, edge});
            }
        }
    }
    return conflicts;
}

GridDrawing perturb(const GridDrawing &drawing, const std::vector<Conflict> &conflicts, Rational epsilon,
                    std::size_t max_rounds) {
    constexpr std::int64_t max_steps = 8;
    GridDrawing out = drawing;
    std::vector<Conflict> pending = conflicts;
    for (std::size_t round = 0; !pending.empty(); ++round) {
        if (round >= max_rounds) {
            throw Unresolvable(std::to_string(pending.size()) + " point/edge conflicts remain after " +
                               std::to_string(max_rounds) + " perturbation rounds");
        }
        std::set<ElementId> movers;
        for (const auto &c : pending) {
            movers.insert(c.element);
        }
        for (ElementId p : movers) {
            if (clear_of_conflicts(out, p)) {
                continue;
            }
            const Rational origin = out.plane[p].x;
            bool placed = false;
            for (std::int64_t step = 1; step <= max_steps && !placed; ++step) {
                for (std::int64_t sign : {1, -1}) {
                    out.plane[p].x = origin + Rational(sign * step) * epsilon;
                    if (clear_of_conflicts(out, p)) {
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed) {
                out.plane[p].x = origin + epsilon;
            }
        }
        pending = detect_collinear(out);
    }
    return out;
}

GridDrawing postprocess(const GridDrawing &drawing, Rational epsilon) {
    return perturb(drawing, detect_collinear(drawing), epsilon);
}

std::string emit_svg(const GridDrawing &drawing, const CanvasSpec &spec) {
    spec.validate();
    const Bounds b = bounds_of(drawing);
    const double width = (b.max_x - b.min_x) * spec.unit + 2 * spec.margin;
    const double height = (b.max_y - b.min_y) * spec.unit + 2 * spec.margin;
    auto sx = [&](const PlanePoint &p) { return spec.margin + (p.x.to_double() - b.min_x) * spec.unit; };
    auto sy = [&](const PlanePoint &p) { return spec.margin + (b.max_y - p.y.to_double()) * spec.unit; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << number(width) << "\" height=\""
        << number(height) << "\" viewBox=\"0 0 " << number(width) << " " << number(height) << "\">\n";
    out << "  <g class=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto &[a, c] : drawing.cover_edges) {
        const auto &pa = drawing.plane[a];
        const auto &pc = drawing.plane[c];
        out << "    <line x1=\"" << number(sx(pa)) << "\" y1=\"" << number(sy(pa)) << "\" x2=\"" << number(sx(pc))
            << "\" y2=\"" << number(sy(pc)) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g class=\"nodes\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto &p : drawing.plane) {
        out << "    <circle cx=\"" << number(sx(p)) << "\" cy=\"" << number(sy(p)) << "\" r=\""
            << number(spec.node_radius) << "\"/>\n";
    }
    out << "  </g>\n";
    if (spec.labels != LabelPlacement::None) {
        out << "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << number(spec.font_size) << "\">\n";
        for (std::size_t i = 0; i < drawing.plane.size(); ++i) {
            const auto &p = drawing.plane[i];
            double x = sx(p);
            double y = sy(p);
            std::string anchor = "start";
            if (spec.labels == LabelPlacement::Right) {
                x += spec.node_radius + 3;
                y += spec.font_size / 3;
            } else {
                y -= spec.node_radius + 3;
                anchor = "middle";
            }
            out << "    <text x=\"" << number(x) << "\" y=\"" << number(y) << "\" text-anchor=\"" << anchor << "\">"
                << xml_escape(drawing.labels[i]) << "</text>\n";
        }
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string emit_tikz(const GridDrawing &drawing, const CanvasSpec &spec) {
    spec.validate();
    const double scale = spec.unit / 40.0;
    std::ostringstream out;
    out << "\\documentclass[tikz]{standalone}\n";
    out << "\\begin{document}\n";
    out << "\\begin{tikzpicture}[x=" << number(scale) << "cm,y=" << number(scale) << "cm]\n";
    out << "  \\tikzset{element/.style={circle,draw,fill=white,inner sep=0pt,minimum size="
        << number(2 * spec.node_radius * 0.035) << "cm}}\n";
    for (const auto &[a, c] : drawing.cover_edges) {
        out << "  \\draw (" << number(drawing.plane[a].x.to_double()) << "," << number(drawing.plane[a].y.to_double())
            << ") -- (" << number(drawing.plane[c].x.to_double()) << "," << number(drawing.plane[c].y.to_double())
            << ");\n";
    }
    const char *side = spec.labels == LabelPlacement::Above ? "above" : "right";
    for (std::size_t i = 0; i < drawing.plane.size(); ++i) {
        out << "  \\node[element";
        if (spec.labels != LabelPlacement::None) {
            out << ",label={" << side << ":{" << tex_escape(drawing.labels[i]) << "}}";
        }
        out << "] (n" << i << ") at (" << number(drawing.plane[i].x.to_double()) << ","
            << number(drawing.plane[i].y.to_double()) << ") {};\n";
    }
    out << "\\end{tikzpicture}\n";
    out << "\\end{document}\n";
    return out.str();
}

std::string emit_json(const GridDrawing &drawing, std::size_t false_comparabilities) {
    using nlohmann::json;
    json doc;
    doc["format"] = "orderdraw-drawing";
    doc["version"] = 1;
    json elements = json::array();
    for (std::size_t i = 0; i < drawing.labels.size(); ++i) {
        elements.push_back({{"id", i},
                            {"label", drawing.labels[i]},
                            {"grid", {drawing.grid[i].c1, drawing.grid[i].c2}},
                            {"plane", {drawing.plane[i].x.to_double(), drawing.plane[i].y.to_double()}}});
    }
    doc["elements"] = std::move(elements);
    auto pairs = [&](const PairSet &set) {
        json arr = json::array();
        for (const auto &[a, b] : set) {
            arr.push_back({drawing.labels[a], drawing.labels[b]});
        }
        return arr;
    };
    doc["cover_edges"] = pairs(drawing.cover_edges);
    doc["extension"] = pairs(drawing.extension.extension);
    json passes = json::array();
    for (const auto &record : drawing.extension.pass_log) {
        json removed = json::array();
        for (const auto &p : record.removed) {
            removed.push_back({drawing.labels[p.a], drawing.labels[p.b]});
        }
        passes.push_back({{"tig_vertices", record.tig_vertices},
                          {"tig_edges", record.tig_edges},
                          {"method", to_string(record.method)},
                          {"optimal", record.optimal},
                          {"removed", std::move(removed)}});
    }
    doc["passes"] = std::move(passes);
    doc["false_comparabilities"] = false_comparabilities;
    return doc.dump(2) + "\n";
}

std::string emit_dot(const GridDrawing &drawing, const CanvasSpec &spec) {
    spec.validate();
    const double points_per_unit = spec.unit * 0.75;
    std::ostringstream out;
    out << "digraph order {\n";
    out << "  rankdir=BT;\n  node [shape=circle, width=" << number(2 * spec.node_radius / 72.0)
        << ", fixedsize=true, label=\"\"];\n";
    for (std::size_t i = 0; i < drawing.plane.size(); ++i) {
        std::string label = drawing.labels[i];
        std::string escaped;
        for (char c : label) {
            if (c == '"' || c == '\\') {
                escaped += '\\';
            }
            escaped += c;
        }
        out << "  n" << i << " [xlabel=\"" << escaped << "\", pos=\""
            << number(drawing.plane[i].x.to_double() * points_per_unit) << ","
            << number(drawing.plane[i].y.to_double() * points_per_unit) << "!\"];\n";
    }
    for (const auto &[a, b] : drawing.cover_edges) {
        out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace orderdraw
