#include "orderdraw/ingest.hpp"

#include "orderdraw/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace orderdraw {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
    }
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

bool writable_label(const std::string &label) {
    if (label.empty()) {
        return false;
    }
    return std::none_of(label.begin(), label.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '#';
    });
}

} // namespace

OrderText parse_order_text(std::string_view text) {
    std::vector<std::string> labels;
    std::set<std::string> known;
    std::vector<std::pair<std::string, std::string>> named;
    auto note = [&](const std::string &label) {
        if (known.insert(label).second) {
            labels.push_back(label);
        }
    };

    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        std::string_view line = lines[i];
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.rfind("elements:", 0) == 0) {
            for (const auto &w : words(line.substr(9))) {
                note(w);
            }
            continue;
        }
        const auto lt = line.find('<');
        if (lt == std::string_view::npos) {
            throw ParseError(lineno, "expected 'a < b'");
        }
        if (line.find('<', lt + 1) != std::string_view::npos) {
            throw ParseError(lineno, "more than one '<'");
        }
        const auto lhs = words(line.substr(0, lt));
        const auto rhs = words(line.substr(lt + 1));
        if (lhs.size() != 1 || rhs.size() != 1) {
            throw ParseError(lineno, "each side of '<' must be a single label");
        }
        note(lhs[0]);
        note(rhs[0]);
        named.emplace_back(lhs[0], rhs[0]);
    }

    OrderText out;
    out.ground = GroundSet(labels);
    for (const auto &[a, b] : named) {
        out.pairs.emplace(out.ground.id(a), out.ground.id(b));
    }
    return out;
}

OrderRelation read_order_text(std::string_view text) {
    OrderText parsed = parse_order_text(text);
    if (parsed.ground.empty()) {
        throw ParseError(1, "no elements");
    }
    try {
        return OrderRelation::from_generators(std::move(parsed.ground), std::move(parsed.pairs));
    } catch (const CycleError &e) {
        throw ParseError(std::max<std::size_t>(split_lines(text).size(), 1), e.what());
    }
}

std::string serialize_order(const OrderRelation &order) {
    std::string out = "elements:";
    for (const auto &label : order.ground().labels()) {
        if (!writable_label(label)) {
            throw Error("label '" + label + "' cannot be written to an order file");
        }
        out += " " + label;
    }
    out += "\n";
    for (const auto &[a, b] : cover_relation(order)) {
        out += order.label(a) + " < " + order.label(b) + "\n";
    }
    return out;
}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<std::vector<bool>> incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), incidence_(std::move(incidence)) {
    if (incidence_.size() != objects_.size()) {
        throw Error("incidence has " + std::to_string(incidence_.size()) + " rows for " +
                    std::to_string(objects_.size()) + " objects");
    }
    for (const auto &row : incidence_) {
        if (row.size() != attributes_.size()) {
            throw Error("incidence row length does not match the attribute count");
        }
    }
    if (std::set<std::string>(objects_.begin(), objects_.end()).size() != objects_.size()) {
        throw Error("duplicate object label");
    }
    if (std::set<std::string>(attributes_.begin(), attributes_.end()).size() != attributes_.size()) {
        throw Error("duplicate attribute label");
    }
}

FormalContext parse_cxt(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t at = 0;
    auto next = [&](const char *what) -> std::string_view {
        if (at >= lines.size()) {
            throw ParseError(lines.size() + 1, std::string("unexpected end of input, expected ") + what);
        }
        return lines[at++];
    };
    auto as_count = [](std::string_view s, std::size_t &value) {
        s = trim(s);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
    };

    if (trim(next("'B'")) != "B") {
        throw ParseError(1, "missing 'B' header");
    }
    std::size_t n_objects = 0;
    std::size_t n_attributes = 0;
    // The name line is optional; counts may follow the header directly.
    if (!as_count(next("name or object count"), n_objects)) {
        if (!as_count(next("object count"), n_objects)) {
            throw ParseError(at, "expected object count");
        }
    }
    if (!as_count(next("attribute count"), n_attributes)) {
        throw ParseError(at, "expected attribute count");
    }
    while (at < lines.size() && trim(lines[at]).empty()) {
        ++at;
    }

    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < n_objects; ++i) {
        objects.emplace_back(trim(next("object label")));
    }
    for (std::size_t i = 0; i < n_attributes; ++i) {
        attributes.emplace_back(trim(next("attribute label")));
    }
    std::vector<std::vector<bool>> incidence;
    for (std::size_t i = 0; i < n_objects; ++i) {
        const std::string_view row = trim(next("incidence row"));
        if (row.size() != n_attributes) {
            throw ParseError(at, "row has " + std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(n_attributes));
        }
        std::vector<bool> bits(n_attributes);
        for (std::size_t j = 0; j < n_attributes; ++j) {
            if (row[j] == 'X' || row[j] == 'x') {
                bits[j] = true;
            } else if (row[j] != '.') {
                throw ParseError(at, std::string("unexpected character '") + row[j] + "' in row");
            }
        }
        incidence.push_back(std::move(bits));
    }
    for (; at < lines.size(); ++at) {
        if (!trim(lines[at]).empty()) {
            throw ParseError(at + 1, "trailing content after the incidence rows");
        }
    }
    try {
        return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(at, e.what());
    }
}

std::string serialize_cxt(const FormalContext &context) {
    std::string out = "B\n\n" + std::to_string(context.objects().size()) + "\n" +
                      std::to_string(context.attributes().size()) + "\n\n";
    for (const auto &o : context.objects()) {
        out += o + "\n";
    }
    for (const auto &a : context.attributes()) {
        out += a + "\n";
    }
    for (std::size_t i = 0; i < context.objects().size(); ++i) {
        for (std::size_t j = 0; j < context.attributes().size(); ++j) {
            out += context.has(i, j) ? 'X' : '.';
        }
        out += "\n";
    }
    return out;
}

OrderRelation concept_lattice(const FormalContext &context, std::size_t max_concepts) {
    const std::size_t g = context.objects().size();
    const std::size_t m = context.attributes().size();
    using Bits = std::vector<bool>;

    auto extent_of = [&](const Bits &intent) {
        Bits extent(g, true);
        for (std::size_t o = 0; o < g; ++o) {
            for (std::size_t a = 0; a < m && extent[o]; ++a) {
                extent[o] = !intent[a] || context.has(o, a);
            }
        }
        return extent;
    };
    auto intent_of = [&](const Bits &extent) {
        Bits intent(m, true);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t o = 0; o < g && intent[a]; ++o) {
                intent[a] = !extent[o] || context.has(o, a);
            }
        }
        return intent;
    };

    // Next closure over attribute sets in lectic order.
    std::vector<Bits> extents;
    Bits intent = intent_of(extent_of(Bits(m, false)));
    for (;;) {
        extents.push_back(extent_of(intent));
        if (extents.size() > max_concepts) {
            throw TooLarge("concept lattice has more than " + std::to_string(max_concepts) + " concepts");
        }
        bool advanced = false;
        for (std::size_t i = m; i-- > 0;) {
            if (intent[i]) {
                continue;
            }
            Bits seed(m, false);
            for (std::size_t j = 0; j < i; ++j) {
                seed[j] = intent[j];
            }
            seed[i] = true;
            Bits closed = intent_of(extent_of(seed));
            bool canonical = true;
            for (std::size_t j = 0; j < i && canonical; ++j) {
                canonical = closed[j] == intent[j];
            }
            if (canonical) {
                intent = std::move(closed);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            break;
        }
    }

    auto members = [&](const Bits &extent) {
        std::vector<std::size_t> ids;
        for (std::size_t o = 0; o < g; ++o) {
            if (extent[o]) {
                ids.push_back(o);
            }
        }
        return ids;
    };
    std::vector<std::vector<std::size_t>> sorted;
    sorted.reserve(extents.size());
    for (const auto &e : extents) {
        sorted.push_back(members(e));
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::vector<std::string> labels;
    for (const auto &ids : sorted) {
        std::string label = "{";
        for (std::size_t k = 0; k < ids.size(); ++k) {
            if (k > 0) {
                label += ",";
            }
            for (char c : context.objects()[ids[k]]) {
                label += std::isspace(static_cast<unsigned char>(c)) ? '_' : c;
            }
        }
        labels.push_back(label + "}");
    }

    const std::size_t n = sorted.size();
    BoolMatrix leq(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            leq.set(i, j, std::includes(sorted[j].begin(), sorted[j].end(), sorted[i].begin(), sorted[i].end()));
        }
    }
    return OrderRelation::from_matrix(GroundSet(std::move(labels)), std::move(leq));
}

} // namespace orderdraw
