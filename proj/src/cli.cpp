#include "orderdraw/cli.hpp"

#include "orderdraw/errors.hpp"
#include "orderdraw/ingest.hpp"
#include "orderdraw/orientation.hpp"
#include "orderdraw/tig.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace orderdraw {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool looks_like_cxt(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            return line == "B";
        }
    }
    return false;
}

/// Writes to `out` for "-", otherwise to the named file.
void write_output(const std::string &path, const std::string &content, std::ostream &out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) {
        throw Error("cannot write '" + path + "'");
    }
}

OutputFormat format_from_path(const std::string &path, OutputFormat fallback) {
    static const std::map<std::string, OutputFormat> by_extension = {
        {".svg", OutputFormat::Svg}, {".tex", OutputFormat::Tikz}, {".tikz", OutputFormat::Tikz},
        {".json", OutputFormat::Json}, {".dot", OutputFormat::Dot}, {".cnf", OutputFormat::Cnf},
    };
    for (const auto &[ext, format] : by_extension) {
        if (ends_with(path, ext)) {
            return format;
        }
    }
    return fallback;
}

std::string pair_list(const OrderRelation &order, const PairSet &pairs) {
    std::string out;
    for (const auto &[a, b] : pairs) {
        out += (out.empty() ? "" : " ") + ("(" + order.label(a) + "," + order.label(b) + ")");
    }
    return out;
}

SatBackend resolve_backend(const std::string &kind, const std::string &command) {
    if (kind == "builtin") {
        return SatBackend::builtin();
    }
    std::string cmd = command;
    if (cmd.empty()) {
        if (const char *env = std::getenv("ORDERDRAW_SAT_SOLVER"); env != nullptr) {
            cmd = env;
        }
    }
    if (cmd.empty()) {
        throw BackendFailure("external backend selected but no solver command given "
                             "(use --solver-cmd or ORDERDRAW_SAT_SOLVER)");
    }
    return SatBackend::external(cmd);
}

int cmd_draw(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const auto started = std::chrono::steady_clock::now();
    const OrderRelation order = load_order(cfg.input, cfg.input_format);
    StrategyConfig strategy;
    strategy.strategy = cfg.strategy;
    strategy.backend = cfg.backend;
    strategy.k_search = cfg.k_search;
    strategy.seed = cfg.seed;

    GridDrawing drawing = compute_coordinates(order, strategy);
    const std::size_t conflicts = detect_collinear(drawing).size();
    if (cfg.postprocess && conflicts > 0) {
        drawing = postprocess(drawing);
    }
    const DominanceReport report = weak_dominance_stats(drawing, order);
    const std::size_t inc = incomparable_pairs(order).size();

    if (cfg.verbosity > 0) {
        for (std::size_t i = 0; i < drawing.extension.pass_log.size(); ++i) {
            const PassRecord &p = drawing.extension.pass_log[i];
            err << "pass " << i + 1 << ": tig " << p.tig_vertices << " vertices, " << p.tig_edges << " edges, removed "
                << p.removed.size() << " (" << to_string(p.method) << (p.optimal ? ", optimal" : "") << ")\n";
        }
        err << "C: " << pair_list(order, drawing.extension.extension) << "\n";
    }

    std::string rendered;
    switch (cfg.output_format) {
    case OutputFormat::Svg:
        rendered = emit_svg(drawing, cfg.canvas);
        break;
    case OutputFormat::Tikz:
        rendered = emit_tikz(drawing, cfg.canvas);
        break;
    case OutputFormat::Json:
        rendered = emit_json(drawing, report.false_comparabilities);
        break;
    case OutputFormat::Dot:
        rendered = emit_dot(drawing, cfg.canvas);
        break;
    case OutputFormat::Cnf:
        throw Error("draw cannot write CNF; use the cnf subcommand");
    }
    write_output(cfg.output, rendered, out);

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    char line[256];
    std::snprintf(line, sizeof line, "n=%zu inc=%zu passes=%zu |C|=%zu false_comparabilities=%zu time=%.3fs\n",
                  order.size(), inc, drawing.extension.passes, drawing.extension.extension.size(),
                  report.false_comparabilities, seconds);
    (cfg.output == "-" ? err : out) << line;

    if (!cfg.summary_json.empty()) {
        nlohmann::json summary;
        summary["n"] = order.size();
        summary["incomparable_pairs"] = inc;
        summary["passes"] = drawing.extension.passes;
        summary["extension_size"] = drawing.extension.extension.size();
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto &[a, b] : drawing.extension.extension) {
            pairs.push_back({order.label(a), order.label(b)});
        }
        summary["extension"] = std::move(pairs);
        summary["false_comparabilities"] = report.false_comparabilities;
        summary["collinear_conflicts"] = conflicts;
        summary["strategy"] = to_string(cfg.strategy);
        summary["seed"] = cfg.seed;
        write_output(cfg.summary_json, summary.dump(2) + "\n", out);
    }
    return 0;
}

int cmd_cnf(const RunConfig &cfg, std::size_t k, std::ostream &out, std::ostream &err) {
    const OrderRelation order = load_order(cfg.input, cfg.input_format);
    const TigGraph tig = build_tig(order);
    const CnfInstance cnf = encode_oct(tig.graph(), k);
    write_output(cfg.output, to_dimacs(cnf), out);
    (cfg.output == "-" ? err : out) << "n=" << tig.vertex_count() << " m=" << tig.edge_count() << " k=" << k
                                    << " vars=" << cnf.num_vars << " clauses=" << cnf.clauses.size() << "\n";
    return 0;
}

int cmd_dim(const RunConfig &cfg, bool realizer, std::ostream &out) {
    const OrderRelation order = load_order(cfg.input, cfg.input_format);
    const auto conjugate = compute_conjugate_order(order);
    out << "dim<=2: " << (conjugate ? "yes" : "no") << "\n";
    if (conjugate && realizer) {
        const auto [first, second] = realizer_from_conjugate(order, *conjugate);
        int index = 1;
        for (const LinearExtension *ext : {&first, &second}) {
            out << "L" << index++ << ":";
            for (ElementId x : ext->sequence()) {
                out << " " << order.label(x);
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_tig(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const OrderRelation order = load_order(cfg.input, cfg.input_format);
    const TigGraph tig = build_tig(order);
    write_output(cfg.output, tig_to_dot(tig, order), out);
    const bool bipartite = bipartite_check(tig.graph()).bipartite();
    (cfg.output == "-" ? err : out) << "vertices=" << tig.vertex_count() << " edges=" << tig.edge_count()
                                    << " bipartite=" << (bipartite ? "yes" : "no") << "\n";
    return 0;
}

/// A DIMACS solver front end speaking either output dialect.
int cmd_solve(const std::string &input, const std::string &output, const std::string &dialect, std::ostream &out) {
    const CnfInstance cnf = parse_dimacs(read_file(input));
    const SatResult result = solve_cnf(cnf);
    std::string text;
    if (dialect == "competition") {
        text = result.satisfiable() ? "s SATISFIABLE\nv" : "s UNSATISFIABLE\n";
        if (result.satisfiable()) {
            for (int v = 1; v <= cnf.num_vars; ++v) {
                text += " " + std::to_string(result.value(v) ? v : -v);
            }
            text += " 0\n";
        }
    } else {
        text = result.satisfiable() ? "SAT\n" : "UNSAT\n";
        if (result.satisfiable()) {
            for (int v = 1; v <= cnf.num_vars; ++v) {
                text += std::to_string(result.value(v) ? v : -v) + " ";
            }
            text += "0\n";
        }
    }
    write_output(output.empty() ? "-" : output, text, out);
    if (dialect == "competition") {
        return result.satisfiable() ? 10 : 20;
    }
    return 0;
}

} // namespace

OrderRelation load_order(const std::string &path, InputFormat format) {
    const std::string text = read_file(path);
    if (format == InputFormat::Auto) {
        format = ends_with(path, ".cxt") || looks_like_cxt(text) ? InputFormat::Cxt : InputFormat::Order;
    }
    if (format == InputFormat::Cxt) {
        return concept_lattice(parse_cxt(text));
    }
    return read_order_text(text);
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Dominance drawings of ordered sets"};
    app.name("orderdraw");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string input_format = "auto";
    std::string output_format;
    std::string strategy = "sat";
    std::string backend = "builtin";
    std::string solver_cmd;
    std::string k_search = "linear";
    std::string labels = "right";
    std::size_t k = 0;
    bool show_realizer = false;
    std::string solve_in;
    std::string solve_out;
    std::string dialect = "competition";

    auto add_input = [&](CLI::App *sub) {
        sub->add_option("-i,--input", cfg.input, "Order (.order) or context (.cxt) file")->required();
        sub->add_option("--input-format", input_format, "auto, order or cxt")
            ->check(CLI::IsMember({"auto", "order", "cxt"}));
    };
    auto add_solver = [&](CLI::App *sub) {
        sub->add_option("--solver", strategy, "sat, greedy, anneal, genetic or brute")
            ->check(CLI::IsMember({"sat", "greedy", "anneal", "genetic", "brute"}));
        sub->add_option("--backend", backend, "builtin or external")->check(CLI::IsMember({"builtin", "external"}));
        sub->add_option("--solver-cmd", solver_cmd,
                        "External DIMACS solver; {in}/{out} are replaced by file paths "
                        "(default: $ORDERDRAW_SAT_SOLVER)");
        sub->add_option("--k-search", k_search, "linear or binary")->check(CLI::IsMember({"linear", "binary"}));
        sub->add_option("--seed", cfg.seed, "Seed for the heuristics");
    };

    CLI::App *draw = app.add_subcommand("draw", "Compute a dominance drawing");
    add_input(draw);
    add_solver(draw);
    draw->add_option("-o,--output", cfg.output, "Output file, - for stdout");
    draw->add_option("-f,--format", output_format, "svg, tikz, json or dot (default: from extension, else svg)")
        ->check(CLI::IsMember({"svg", "tikz", "json", "dot"}));
    draw->add_flag("!--no-postprocess", cfg.postprocess, "Keep points that lie on edges");
    draw->add_option("--summary-json", cfg.summary_json, "Write a machine-readable run summary");
    draw->add_option("--unit", cfg.canvas.unit, "Pixels per plane unit");
    draw->add_option("--labels", labels, "right, above or none")->check(CLI::IsMember({"right", "above", "none"}));
    draw->add_flag("-v,--verbose", cfg.verbosity, "Report each extension pass");

    CLI::App *cnf = app.add_subcommand("cnf", "Export the bipartization CNF of the incompatibility graph");
    add_input(cnf);
    cnf->add_option("-k", k, "Deletion budget")->required();
    cnf->add_option("-o,--output", cfg.output, "Output file, - for stdout");

    CLI::App *dim = app.add_subcommand("dim", "Test whether the order has dimension at most two");
    add_input(dim);
    dim->add_flag("--realizer", show_realizer, "Print two linear extensions realizing the order");

    CLI::App *tig = app.add_subcommand("tig", "Write the incompatibility graph as DOT");
    add_input(tig);
    tig->add_option("-o,--output", cfg.output, "Output file, - for stdout");

    CLI::App *solve = app.add_subcommand("solve", "Solve a DIMACS CNF with the built-in solver");
    solve->add_option("cnf", solve_in, "DIMACS file")->required();
    solve->add_option("result", solve_out, "Write the verdict here instead of stdout");
    solve->add_option("--dialect", dialect, "competition or minisat")
        ->check(CLI::IsMember({"competition", "minisat"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        cfg.input_format = input_format == "order" ? InputFormat::Order
                           : input_format == "cxt" ? InputFormat::Cxt
                                                   : InputFormat::Auto;
        cfg.strategy = parse_strategy(strategy);
        cfg.k_search = k_search == "binary" ? KSearch::Binary : KSearch::Linear;
        cfg.canvas.labels = labels == "above" ? LabelPlacement::Above
                            : labels == "none" ? LabelPlacement::None
                                               : LabelPlacement::Right;
        if (output_format.empty()) {
            cfg.output_format = format_from_path(cfg.output, OutputFormat::Svg);
        } else {
            cfg.output_format = output_format == "tikz"   ? OutputFormat::Tikz
                                : output_format == "json" ? OutputFormat::Json
                                : output_format == "dot"  ? OutputFormat::Dot
                                                          : OutputFormat::Svg;
        }

        if (*solve) {
            return cmd_solve(solve_in, solve_out, dialect, out);
        }
        if (*dim) {
            return cmd_dim(cfg, show_realizer, out);
        }
        if (*tig) {
            return cmd_tig(cfg, out, err);
        }
        if (*cnf) {
            return cmd_cnf(cfg, k, out, err);
        }
        cfg.backend = resolve_backend(backend, solver_cmd);
        return cmd_draw(cfg, out, err);
    } catch (const ParseError &e) {
        err << "error: " << (e.line() == 0 ? e.reason() : std::string(e.what())) << "\n";
        return 1;
    } catch (const UnknownLabel &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const CycleError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const TooLarge &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BackendFailure &e) {
        err << "solver backend failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace orderdraw
