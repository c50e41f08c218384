#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orderdraw {

/// Signed DIMACS literal: +v or -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

/// Variable layout of the odd-cycle-transversal encoding for a graph on
/// `vertices` vertices and budget `k`. Vertex and counter indices are 1-based
/// as in the usual presentation: V(i,s) = (s-1)*n + i, s(i,j) = 3n + (i-1)k + j.
struct OctVariables {
    std::size_t vertices = 0;
    std::size_t k = 0;

    /// side 1 and 2 are the colour classes, side 3 marks removal.
    Literal partition(std::size_t i, int side) const {
        return static_cast<Literal>((static_cast<std::size_t>(side) - 1) * vertices + i);
    }
    Literal counter(std::size_t i, std::size_t j) const {
        return static_cast<Literal>(3 * vertices + (i - 1) * k + j);
    }
};

struct CnfInstance {
    int num_vars = 0;
    std::vector<Clause> clauses;
    std::optional<OctVariables> var_map;
};

/// "p cnf <vars> <clauses>" header, one 0-terminated clause per line.
std::string to_dimacs(const CnfInstance &cnf);
/// Accepts 'c' comment lines and clauses spanning lines. Throws ParseError.
CnfInstance parse_dimacs(std::string_view text);

/// `model[v]` is the value of variable v (index 0 unused).
bool evaluate(const CnfInstance &cnf, const std::vector<bool> &model);

enum class SatStatus { Sat, Unsat };

struct SatResult {
    SatStatus status = SatStatus::Unsat;
    std::vector<bool> model; // size num_vars + 1 when Sat

    bool satisfiable() const noexcept { return status == SatStatus::Sat; }
    bool value(Literal var) const { return model.at(static_cast<std::size_t>(var)); }
};

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learnt = 0;
};

/// CDCL solver: two watched literals, first-UIP learning with local
/// minimisation, VSIDS (ties to the lowest variable id), phase saving
/// starting at true, Luby restarts and activity-based learnt-clause
/// reduction. Fully deterministic.
class CdclSolver {
public:
    explicit CdclSolver(int num_vars);

    /// Only valid before solve().
    void add_clause(std::span<const Literal> clause);
    SatStatus solve();

    bool value(Literal var) const;
    std::vector<bool> model() const;
    const SolverStats &stats() const noexcept { return stats_; }

private:
    using Lit = std::uint32_t;
    using ClauseRef = std::int32_t;
    static constexpr ClauseRef no_reason = -1;

    struct ClauseData {
        std::vector<Lit> lits;
        bool learnt = false;
        bool deleted = false;
        double activity = 0.0;
    };

    static Lit to_lit(Literal l) {
        return l > 0 ? static_cast<Lit>(2 * (l - 1)) : static_cast<Lit>(2 * (-l - 1) + 1);
    }
    static std::size_t var_of(Lit l) { return l >> 1; }

    // 1 true, 0 false, -1 unassigned
    int lit_value(Lit l) const {
        const int a = assigns_[var_of(l)];
        return a < 0 ? -1 : (a ^ static_cast<int>(l & 1));
    }

    void attach(ClauseRef cref);
    void enqueue(Lit l, ClauseRef reason);
    ClauseRef propagate();
    void analyze(ClauseRef conflict, std::vector<Lit> &learnt, int &backtrack_level);
    bool redundant(Lit l) const;
    void cancel_until(int level);
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    std::optional<Lit> pick_branch();
    void bump_var(std::size_t v);
    void bump_clause(ClauseData &c);
    void reduce_learnts();

    // indexed max-heap over variables keyed by activity
    bool heap_less(std::size_t a, std::size_t b) const;
    void heap_insert(std::size_t v);
    void heap_up(std::size_t pos);
    void heap_down(std::size_t pos);
    std::size_t heap_pop();

    std::size_t num_vars_;
    bool ok_ = true;
    std::vector<ClauseData> clauses_;
    std::vector<std::vector<ClauseRef>> watches_;
    std::vector<int> assigns_;
    std::vector<std::uint8_t> phase_;
    std::vector<int> level_;
    std::vector<ClauseRef> reason_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::vector<std::size_t> heap_;
    std::vector<std::int64_t> heap_pos_;
    std::vector<std::uint8_t> seen_;
    std::size_t learnt_count_ = 0;
    SolverStats stats_;
};

/// Which solver runs a CNF: the built-in CDCL solver or an external program
/// that reads DIMACS. The external command may contain "{in}" and "{out}"
/// placeholders; without "{in}" the CNF path is appended. With "{out}" the
/// verdict is read from that file, otherwise from standard output. Both the
/// MiniSat ("SAT" / model line) and competition ("s SATISFIABLE" / "v" lines)
/// dialects are understood.
struct SatBackend {
    enum class Kind { Builtin, External };

    Kind kind = Kind::Builtin;
    std::string command;

    static SatBackend builtin() { return {}; }
    static SatBackend external(std::string command) { return {Kind::External, std::move(command)}; }
};

/// `hints` are extra unit literals applied by the built-in backend only; they
/// must not change satisfiability (used for symmetry breaking).
/// Throws BackendFailure for external crashes or unreadable output.
SatResult solve_cnf(const CnfInstance &cnf, const SatBackend &backend = {},
                    std::span<const Literal> hints = {});

/// Normalises solver output of either dialect. Throws BackendFailure.
SatResult parse_solver_output(std::string_view text, int num_vars);

} // namespace orderdraw
