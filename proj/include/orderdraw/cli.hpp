#pragma once

#include "orderdraw/engine.hpp"
#include "orderdraw/render.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace orderdraw {

enum class InputFormat { Auto, Order, Cxt };
enum class OutputFormat { Svg, Tikz, Json, Dot, Cnf };

struct RunConfig {
    std::string input;
    InputFormat input_format = InputFormat::Auto;
    std::string output = "-";
    OutputFormat output_format = OutputFormat::Svg;
    Strategy strategy = Strategy::Sat;
    SatBackend backend;
    KSearch k_search = KSearch::Linear;
    std::uint64_t seed = 0;
    bool postprocess = true;
    int verbosity = 0;
    std::string summary_json; // empty: none
    CanvasSpec canvas;
};

/// Reads an order file or a formal context (turned into its concept lattice).
/// Auto picks .cxt by extension or a leading "B" line.
OrderRelation load_order(const std::string &path, InputFormat format = InputFormat::Auto);

/// Entry point of the command-line tool. Exit codes: 0 success, 1 bad input
/// or usage, 2 SAT backend failure, 3 internal invariant violation.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace orderdraw
