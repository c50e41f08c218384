#include "orderdraw/sat.hpp"

#include "orderdraw/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace orderdraw {

// ---------------------------------------------------------------------------
// DIMACS

std::string to_dimacs(const CnfInstance &cnf) {
    std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
    for (const auto &clause : cnf.clauses) {
        for (Literal l : clause) {
            out += std::to_string(l);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

CnfInstance parse_dimacs(std::string_view text) {
    CnfInstance cnf;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    Clause current;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first == "c" || first[0] == 'c' || first == "%") {
            continue;
        }
        if (first == "p") {
            std::string format;
            long long vars = -1;
            long long clauses = -1;
            if (have_header || !(tokens >> format >> vars >> clauses) || format != "cnf" || vars < 0 ||
                clauses < 0) {
                throw ParseError(line_no, "malformed problem line");
            }
            have_header = true;
            cnf.num_vars = static_cast<int>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "clause before 'p cnf' header");
        }
        std::istringstream lits(line);
        long long value = 0;
        while (lits >> value) {
            if (value == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (value > cnf.num_vars || -value > cnf.num_vars) {
                throw ParseError(line_no, "literal " + std::to_string(value) + " exceeds variable count");
            }
            current.push_back(static_cast<Literal>(value));
        }
        if (!lits.eof()) {
            throw ParseError(line_no, "non-numeric token in clause");
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw ParseError(line_no, "last clause is not 0-terminated");
    }
    if (cnf.clauses.size() != declared_clauses) {
        throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(cnf.clauses.size()));
    }
    return cnf;
}

bool evaluate(const CnfInstance &cnf, const std::vector<bool> &model) {
    for (const auto &clause : cnf.clauses) {
        bool satisfied = false;
        for (Literal l : clause) {
            const auto v = static_cast<std::size_t>(l > 0 ? l : -l);
            if (v < model.size() && model[v] == (l > 0)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// CDCL solver

namespace {

double luby(double y, int x) {
    int size = 1;
    int seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    double result = 1.0;
    for (int i = 0; i < seq; ++i) {
        result *= y;
    }
    return result;
}

constexpr double var_decay = 0.95;
constexpr double clause_decay = 0.999;
constexpr int restart_base = 100;

} // namespace

CdclSolver::CdclSolver(int num_vars)
    : num_vars_(static_cast<std::size_t>(std::max(num_vars, 0))), watches_(2 * num_vars_),
      assigns_(num_vars_, -1), phase_(num_vars_, 1), level_(num_vars_, 0), reason_(num_vars_, no_reason),
      activity_(num_vars_, 0.0), heap_pos_(num_vars_, -1), seen_(num_vars_, 0) {
    for (std::size_t v = 0; v < num_vars_; ++v) {
        heap_insert(v);
    }
}

void CdclSolver::add_clause(std::span<const Literal> clause) {
    if (!ok_) {
        return;
    }
    std::vector<Lit> lits;
    lits.reserve(clause.size());
    for (Literal l : clause) {
        if (l == 0 || static_cast<std::size_t>(l > 0 ? l : -l) > num_vars_) {
            throw Error("literal out of range");
        }
        lits.push_back(to_lit(l));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && (lits[i] ^ 1U) == lits[i + 1]) {
            return; // tautology
        }
        const int value = lit_value(lits[i]);
        if (value == 1) {
            return;
        }
        if (value == -1) {
            kept.push_back(lits[i]);
        }
    }
    if (kept.empty()) {
        ok_ = false;
        return;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], no_reason);
        if (propagate() != no_reason) {
            ok_ = false;
        }
        return;
    }
    clauses_.push_back({std::move(kept), false, false, 0.0});
    attach(static_cast<ClauseRef>(clauses_.size() - 1));
}

void CdclSolver::attach(ClauseRef cref) {
    const auto &lits = clauses_[static_cast<std::size_t>(cref)].lits;
    watches_[lits[0]].push_back(cref);
    watches_[lits[1]].push_back(cref);
}

void CdclSolver::enqueue(Lit l, ClauseRef reason) {
    const std::size_t v = var_of(l);
    assigns_[v] = static_cast<int>((l & 1U) ^ 1U);
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
}

CdclSolver::ClauseRef CdclSolver::propagate() {
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++];
        const Lit false_lit = p ^ 1U;
        ++stats_.propagations;
        auto &watchers = watches_[false_lit];
        std::size_t keep = 0;
        for (std::size_t i = 0; i < watchers.size(); ++i) {
            const ClauseRef cref = watchers[i];
            ClauseData &c = clauses_[static_cast<std::size_t>(cref)];
            if (c.deleted) {
                continue;
            }
            auto &lits = c.lits;
            if (lits[0] == false_lit) {
                std::swap(lits[0], lits[1]);
            }
            if (lit_value(lits[0]) == 1) {
                watchers[keep++] = cref;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < lits.size(); ++k) {
                if (lit_value(lits[k]) != 0) {
                    std::swap(lits[1], lits[k]);
                    watches_[lits[1]].push_back(cref);
                    moved = true;
                    break;
                }
            }
            if (moved) {
                continue;
            }
            watchers[keep++] = cref;
            if (lit_value(lits[0]) == 0) {
                for (std::size_t j = i + 1; j < watchers.size(); ++j) {
                    watchers[keep++] = watchers[j];
                }
                watchers.resize(keep);
                qhead_ = trail_.size();
                return cref;
            }
            enqueue(lits[0], cref);
        }
        watchers.resize(keep);
    }
    return no_reason;
}

void CdclSolver::analyze(ClauseRef conflict, std::vector<Lit> &learnt, int &backtrack_level) {
    learnt.clear();
    learnt.push_back(0); // asserting literal goes here
    int path_count = 0;
    std::optional<Lit> p;
    std::size_t index = trail_.size();
    ClauseRef cref = conflict;

    do {
        ClauseData &c = clauses_[static_cast<std::size_t>(cref)];
        if (c.learnt) {
            bump_clause(c);
        }
        for (std::size_t j = p ? 1 : 0; j < c.lits.size(); ++j) {
            const Lit q = c.lits[j];
            const std::size_t v = var_of(q);
            if (!seen_[v] && level_[v] > 0) {
                bump_var(v);
                seen_[v] = 1;
                if (level_[v] >= decision_level()) {
                    ++path_count;
                } else {
                    learnt.push_back(q);
                }
            }
        }
        while (!seen_[var_of(trail_[index - 1])]) {
            --index;
        }
        --index;
        p = trail_[index];
        cref = reason_[var_of(*p)];
        seen_[var_of(*p)] = 0;
        --path_count;
    } while (path_count > 0);
    learnt[0] = *p ^ 1U;

    // Drop literals implied by the rest of the clause through their reason.
    std::vector<Lit> candidates(learnt.begin() + 1, learnt.end());
    std::size_t keep = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
        if (!redundant(learnt[i])) {
            learnt[keep++] = learnt[i];
        }
    }
    learnt.resize(keep);
    for (Lit l : candidates) {
        seen_[var_of(l)] = 0;
    }

    backtrack_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i) {
            if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) {
                max_i = i;
            }
        }
        std::swap(learnt[1], learnt[max_i]);
        backtrack_level = level_[var_of(learnt[1])];
    }
}

bool CdclSolver::redundant(Lit l) const {
    const ClauseRef r = reason_[var_of(l)];
    if (r == no_reason) {
        return false;
    }
    const auto &lits = clauses_[static_cast<std::size_t>(r)].lits;
    for (std::size_t k = 1; k < lits.size(); ++k) {
        const std::size_t v = var_of(lits[k]);
        if (!seen_[v] && level_[v] > 0) {
            return false;
        }
    }
    return true;
}

void CdclSolver::cancel_until(int level) {
    if (decision_level() <= level) {
        return;
    }
    const std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
    for (std::size_t i = trail_.size(); i > stop; --i) {
        const Lit l = trail_[i - 1];
        const std::size_t v = var_of(l);
        phase_[v] = static_cast<std::uint8_t>((l & 1U) ^ 1U);
        assigns_[v] = -1;
        reason_[v] = no_reason;
        if (heap_pos_[v] < 0) {
            heap_insert(v);
        }
    }
    trail_.resize(stop);
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = trail_.size();
}

std::optional<CdclSolver::Lit> CdclSolver::pick_branch() {
    while (!heap_.empty()) {
        const std::size_t v = heap_pop();
        if (assigns_[v] < 0) {
            ++stats_.decisions;
            return static_cast<Lit>(2 * v + (phase_[v] ? 0 : 1));
        }
    }
    return std::nullopt;
}

void CdclSolver::bump_var(std::size_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (double &a : activity_) {
            a *= 1e-100;
        }
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) {
        heap_up(static_cast<std::size_t>(heap_pos_[v]));
    }
}

void CdclSolver::bump_clause(ClauseData &c) {
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
        for (auto &other : clauses_) {
            if (other.learnt) {
                other.activity *= 1e-20;
            }
        }
        clause_inc_ *= 1e-20;
    }
}

void CdclSolver::reduce_learnts() {
    std::vector<ClauseRef> candidates;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        const ClauseData &c = clauses_[i];
        if (!c.learnt || c.deleted || c.lits.size() <= 2) {
            continue;
        }
        const std::size_t v = var_of(c.lits[0]);
        const bool locked = reason_[v] == static_cast<ClauseRef>(i) && lit_value(c.lits[0]) == 1;
        if (!locked) {
            candidates.push_back(static_cast<ClauseRef>(i));
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](ClauseRef a, ClauseRef b) {
        return clauses_[static_cast<std::size_t>(a)].activity < clauses_[static_cast<std::size_t>(b)].activity;
    });
    for (std::size_t i = 0; i < candidates.size() / 2; ++i) {
        ClauseData &c = clauses_[static_cast<std::size_t>(candidates[i])];
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
        --learnt_count_;
    }
    for (auto &w : watches_) {
        w.erase(std::remove_if(w.begin(), w.end(),
                               [&](ClauseRef r) { return clauses_[static_cast<std::size_t>(r)].deleted; }),
                w.end());
    }
}

SatStatus CdclSolver::solve() {
    if (!ok_) {
        return SatStatus::Unsat;
    }
    if (propagate() != no_reason) {
        ok_ = false;
        return SatStatus::Unsat;
    }
    double max_learnts = std::max<double>(static_cast<double>(clauses_.size()) / 3.0, 1000.0);
    int restart_index = 0;
    std::vector<Lit> learnt;

    while (true) {
        const auto budget = static_cast<std::uint64_t>(luby(2.0, restart_index) * restart_base);
        std::uint64_t conflicts_here = 0;
        while (true) {
            const ClauseRef conflict = propagate();
            if (conflict != no_reason) {
                ++stats_.conflicts;
                ++conflicts_here;
                if (decision_level() == 0) {
                    ok_ = false;
                    return SatStatus::Unsat;
                }
                int backtrack_level = 0;
                analyze(conflict, learnt, backtrack_level);
                cancel_until(backtrack_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], no_reason);
                } else {
                    clauses_.push_back({learnt, true, false, 0.0});
                    const auto cref = static_cast<ClauseRef>(clauses_.size() - 1);
                    attach(cref);
                    bump_clause(clauses_.back());
                    enqueue(learnt[0], cref);
                    ++learnt_count_;
                    ++stats_.learnt;
                }
                var_inc_ /= var_decay;
                clause_inc_ /= clause_decay;
                continue;
            }
            if (conflicts_here >= budget) {
                ++stats_.restarts;
                cancel_until(0);
                break;
            }
            if (static_cast<double>(learnt_count_) >= max_learnts) {
                reduce_learnts();
                max_learnts *= 1.1;
            }
            const auto next = pick_branch();
            if (!next) {
                return SatStatus::Sat;
            }
            trail_lim_.push_back(trail_.size());
            enqueue(*next, no_reason);
        }
        ++restart_index;
    }
}

bool CdclSolver::value(Literal var) const {
    return assigns_.at(static_cast<std::size_t>(var - 1)) == 1;
}

std::vector<bool> CdclSolver::model() const {
    std::vector<bool> m(num_vars_ + 1, false);
    for (std::size_t v = 0; v < num_vars_; ++v) {
        m[v + 1] = assigns_[v] == 1;
    }
    return m;
}

bool CdclSolver::heap_less(std::size_t a, std::size_t b) const {
    // true when a should sit above b
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
}

void CdclSolver::heap_insert(std::size_t v) {
    heap_pos_[v] = static_cast<std::int64_t>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
}

void CdclSolver::heap_up(std::size_t pos) {
    const std::size_t v = heap_[pos];
    while (pos > 0) {
        const std::size_t parent = (pos - 1) / 2;
        if (!heap_less(v, heap_[parent])) {
            break;
        }
        heap_[pos] = heap_[parent];
        heap_pos_[heap_[pos]] = static_cast<std::int64_t>(pos);
        pos = parent;
    }
    heap_[pos] = v;
    heap_pos_[v] = static_cast<std::int64_t>(pos);
}

void CdclSolver::heap_down(std::size_t pos) {
    const std::size_t v = heap_[pos];
    while (true) {
        const std::size_t left = 2 * pos + 1;
        if (left >= heap_.size()) {
            break;
        }
        const std::size_t right = left + 1;
        const std::size_t child =
            (right < heap_.size() && heap_less(heap_[right], heap_[left])) ? right : left;
        if (!heap_less(heap_[child], v)) {
            break;
        }
        heap_[pos] = heap_[child];
        heap_pos_[heap_[pos]] = static_cast<std::int64_t>(pos);
        pos = child;
    }
    heap_[pos] = v;
    heap_pos_[v] = static_cast<std::int64_t>(pos);
}

std::size_t CdclSolver::heap_pop() {
    const std::size_t top = heap_.front();
    heap_pos_[top] = -1;
    const std::size_t last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_pos_[last] = 0;
        heap_down(0);
    }
    return top;
}

// ---------------------------------------------------------------------------
// Backends

SatResult parse_solver_output(std::string_view text, int num_vars) {
    std::optional<SatStatus> status;
    std::vector<bool> model(static_cast<std::size_t>(std::max(num_vars, 0)) + 1, false);
    bool expect_model_line = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) {
            continue;
        }
        if (first == "s") {
            std::string word;
            tokens >> word;
            if (word == "SATISFIABLE") {
                status = SatStatus::Sat;
            } else if (word == "UNSATISFIABLE") {
                status = SatStatus::Unsat;
            } else {
                throw BackendFailure("solver reported '" + word + "'");
            }
            continue;
        }
        if (first == "SAT" || first == "SATISFIABLE") {
            status = SatStatus::Sat;
            expect_model_line = true;
            continue;
        }
        if (first == "UNSAT" || first == "UNSATISFIABLE") {
            status = SatStatus::Unsat;
            continue;
        }
        if (first == "INDET" || first == "INDETERMINATE" || first == "UNKNOWN") {
            throw BackendFailure("solver gave up: " + first);
        }
        const bool value_line = first == "v";
        if (!value_line && !expect_model_line) {
            continue;
        }
        std::istringstream values(line);
        if (value_line) {
            values >> first;
        }
        long long lit = 0;
        while (values >> lit) {
            if (lit == 0) {
                continue;
            }
            const auto v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
            if (v < model.size()) {
                model[v] = lit > 0;
            }
        }
    }
    if (!status) {
        throw BackendFailure("solver output has no SAT/UNSAT verdict");
    }
    SatResult result;
    result.status = *status;
    if (*status == SatStatus::Sat) {
        result.model = std::move(model);
    }
    return result;
}

namespace {

SatResult solve_builtin(const CnfInstance &cnf, std::span<const Literal> hints) {
    CdclSolver solver(cnf.num_vars);
    for (const auto &clause : cnf.clauses) {
        solver.add_clause(clause);
    }
    for (Literal hint : hints) {
        const Literal unit[] = {hint};
        solver.add_clause(unit);
    }
    SatResult result;
    result.status = solver.solve();
    if (result.satisfiable()) {
        result.model = solver.model();
    }
    return result;
}

std::string replace_all(std::string s, std::string_view what, const std::string &with) {
    for (std::size_t pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + with.size())) {
        s.replace(pos, what.size(), with);
    }
    return s;
}

std::string shell_quote(const std::string &s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

SatResult solve_external(const CnfInstance &cnf, const std::string &command) {
    namespace fs = std::filesystem;
    static std::atomic<unsigned> counter{0};
    const std::string stem = "orderdraw-" + std::to_string(::getpid()) + "-" + std::to_string(counter++);
    const fs::path in_path = fs::temp_directory_path() / (stem + ".cnf");
    const fs::path out_path = fs::temp_directory_path() / (stem + ".out");
    {
        std::ofstream file(in_path);
        file << to_dimacs(cnf);
        if (!file) {
            throw BackendFailure("cannot write " + in_path.string());
        }
    }
    const bool uses_out = command.find("{out}") != std::string::npos;
    std::string cmd = command;
    if (cmd.find("{in}") != std::string::npos) {
        cmd = replace_all(cmd, "{in}", shell_quote(in_path.string()));
    } else {
        cmd += " " + shell_quote(in_path.string());
    }
    cmd = replace_all(cmd, "{out}", shell_quote(out_path.string()));
    cmd += " 2>/dev/null";

    std::string captured;
    FILE *pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        fs::remove(in_path);
        throw BackendFailure("cannot start external solver");
    }
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        captured.append(buffer, got);
    }
    const int status = ::pclose(pipe);
    std::error_code ignored;
    fs::remove(in_path, ignored);
    if (status == -1 || WIFSIGNALED(status)) {
        fs::remove(out_path, ignored);
        throw BackendFailure("external solver terminated abnormally");
    }
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127) {
        fs::remove(out_path, ignored);
        throw BackendFailure("external solver command not found: " + command);
    }
    if (uses_out) {
        std::ifstream file(out_path);
        std::ostringstream content;
        content << file.rdbuf();
        captured = content.str();
        fs::remove(out_path, ignored);
    }
    SatResult result = parse_solver_output(captured, cnf.num_vars);
    if (result.satisfiable() && !evaluate(cnf, result.model)) {
        throw BackendFailure("external solver returned a model that violates the formula");
    }
    return result;
}

} // namespace

SatResult solve_cnf(const CnfInstance &cnf, const SatBackend &backend, std::span<const Literal> hints) {
    if (backend.kind == SatBackend::Kind::External) {
        return solve_external(cnf, backend.command);
    }
    return solve_builtin(cnf, hints);
}

} // namespace orderdraw
