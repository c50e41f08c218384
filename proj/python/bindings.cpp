#include "orderdraw/engine.hpp"
#include "orderdraw/errors.hpp"
#include "orderdraw/ingest.hpp"
#include "orderdraw/orientation.hpp"
#include "orderdraw/render.hpp"
#include "orderdraw/tig.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace orderdraw;

namespace {

OrderRelation order_from(const std::vector<std::string> &elements,
                         const std::vector<std::pair<std::string, std::string>> &relations) {
    PairSet pairs;
    GroundSet ground(elements);
    for (const auto &[lo, hi] : relations) {
        pairs.emplace(ground.id(lo), ground.id(hi));
    }
    return OrderRelation::from_generators(std::move(ground), std::move(pairs));
}

std::vector<std::pair<std::string, std::string>> labelled(const OrderRelation &o, const PairSet &pairs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &[a, b] : pairs) {
        out.emplace_back(o.label(a), o.label(b));
    }
    return out;
}

StrategyConfig config_of(const std::string &strategy, std::uint64_t seed) {
    StrategyConfig cfg;
    cfg.strategy = parse_strategy(strategy);
    cfg.seed = seed;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_orderdraw, m) {
    m.doc() = "Dominance drawings of finite partial orders";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<CycleError>(m, "CycleError", error.ptr());
    py::register_exception<UnknownLabel>(m, "UnknownLabel", error.ptr());
    py::register_exception<TooLarge>(m, "TooLarge", error.ptr());
    py::register_exception<BackendFailure>(m, "BackendFailure", error.ptr());
    py::register_exception<OrderViolation>(m, "OrderViolation", error.ptr());
    py::register_exception<Unresolvable>(m, "Unresolvable", error.ptr());

    py::class_<OrderRelation>(m, "Order")
        .def(py::init(&order_from), py::arg("elements"), py::arg("relations"))
        .def_static("parse", [](const std::string &text) { return read_order_text(text); })
        .def_static("from_cxt", [](const std::string &text) { return concept_lattice(parse_cxt(text)); })
        .def_property_readonly("elements", [](const OrderRelation &o) { return o.ground().labels(); })
        .def("__len__", &OrderRelation::size)
        .def("leq", [](const OrderRelation &o, const std::string &a, const std::string &b) {
            return o.leq(o.ground().id(a), o.ground().id(b));
        })
        .def("covers", [](const OrderRelation &o) { return labelled(o, cover_relation(o)); })
        .def("incomparable_pairs", [](const OrderRelation &o) { return labelled(o, incomparable_pairs(o)); })
        .def("is_two_dimensional", [](const OrderRelation &o) { return is_two_dimensional(o); })
        .def("serialize", [](const OrderRelation &o) { return serialize_order(o); })
        .def("__eq__", [](const OrderRelation &a, const OrderRelation &b) { return a == b; });

    py::class_<GridDrawing>(m, "Drawing")
        .def_property_readonly("labels", [](const GridDrawing &d) { return d.labels; })
        .def_property_readonly("grid", [](const GridDrawing &d) {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const auto &p : d.grid) {
                out.emplace_back(p.c1, p.c2);
            }
            return out;
        })
        .def_property_readonly("plane", [](const GridDrawing &d) {
            std::vector<std::pair<double, double>> out;
            for (const auto &p : d.plane) {
                out.emplace_back(p.x.to_double(), p.y.to_double());
            }
            return out;
        })
        .def_property_readonly("extension", [](const GridDrawing &d) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto &[a, b] : d.extension.extension) {
                out.emplace_back(d.labels[a], d.labels[b]);
            }
            return out;
        })
        .def_property_readonly("passes", [](const GridDrawing &d) { return d.extension.passes; })
        .def("svg", [](const GridDrawing &d) { return emit_svg(d); })
        .def("tikz", [](const GridDrawing &d) { return emit_tikz(d); })
        .def("dot", [](const GridDrawing &d) { return emit_dot(d); })
        .def("json", [](const GridDrawing &d) { return emit_json(d, d.extension.extension.size()); });

    m.def(
        "draw",
        [](const OrderRelation &order, const std::string &strategy, std::uint64_t seed, bool perturb) {
            GridDrawing d = compute_coordinates(order, config_of(strategy, seed));
            return perturb ? postprocess(d) : d;
        },
        py::arg("order"), py::arg("strategy") = "sat", py::arg("seed") = 0, py::arg("postprocess") = true);

    m.def(
        "false_comparabilities",
        [](const GridDrawing &d, const OrderRelation &order) { return weak_dominance_stats(d, order).false_comparabilities; },
        py::arg("drawing"), py::arg("order"));

    m.def("tig_size", [](const OrderRelation &order) {
        const TigGraph t = build_tig(order);
        return std::make_pair(t.vertex_count(), t.edge_count());
    });

    m.def("standard_example", &generators::standard_example);
    m.def("boolean_lattice", &generators::boolean_lattice);
    m.def("chain", &generators::chain);
    m.def("antichain", &generators::antichain);
    m.def("grid", &generators::grid);
}
