#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orderdraw/errors.hpp"
#include "orderdraw/sat.hpp"

#include <random>

using namespace orderdraw;

namespace {

/// Satisfiable by exhaustive assignment (num_vars <= 20).
bool brute_satisfiable(const CnfInstance &cnf) {
    const auto n = static_cast<std::size_t>(cnf.num_vars);
    std::vector<bool> model(n + 1, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t v = 1; v <= n; ++v) {
            model[v] = ((mask >> (v - 1)) & 1U) != 0;
        }
        if (evaluate(cnf, model)) {
            return true;
        }
    }
    return false;
}

CnfInstance random_ksat(int vars, std::size_t clauses, int width, std::mt19937_64 &rng) {
    CnfInstance cnf;
    cnf.num_vars = vars;
    for (std::size_t i = 0; i < clauses; ++i) {
        Clause c;
        for (int j = 0; j < width; ++j) {
            const int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(vars));
            c.push_back(rng() % 2 == 0 ? v : -v);
        }
        cnf.clauses.push_back(c);
    }
    return cnf;
}

/// n+1 pigeons into n holes.
CnfInstance pigeonhole(int holes) {
    CnfInstance cnf;
    const int pigeons = holes + 1;
    auto var = [&](int p, int h) { return p * holes + h + 1; };
    cnf.num_vars = pigeons * holes;
    for (int p = 0; p < pigeons; ++p) {
        Clause c;
        for (int h = 0; h < holes; ++h) {
            c.push_back(var(p, h));
        }
        cnf.clauses.push_back(c);
    }
    for (int h = 0; h < holes; ++h) {
        for (int p = 0; p < pigeons; ++p) {
            for (int q = p + 1; q < pigeons; ++q) {
                cnf.clauses.push_back({-var(p, h), -var(q, h)});
            }
        }
    }
    return cnf;
}

const std::string solver_path = ORDERDRAW_CLI_PATH;

} // namespace

TEST_CASE("DIMACS round trip") {
    CnfInstance cnf;
    cnf.num_vars = 3;
    cnf.clauses = {{1, -2}, {3}, {-1, 2, -3}};
    const std::string text = to_dimacs(cnf);
    CHECK(text.rfind("p cnf 3 3\n", 0) == 0);
    const CnfInstance back = parse_dimacs("c comment\n" + text);
    CHECK(back.num_vars == 3);
    CHECK(back.clauses == cnf.clauses);
    CHECK(parse_dimacs("p cnf 2 1\n1\n-2 0\n").clauses == std::vector<Clause>{{1, -2}});
}

TEST_CASE("DIMACS errors") {
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 2 0\n"), ParseError);
}

TEST_CASE("trivial formulas") {
    CnfInstance empty;
    empty.num_vars = 2;
    CHECK(solve_cnf(empty).satisfiable());
    CnfInstance contradiction;
    contradiction.num_vars = 1;
    contradiction.clauses = {{1}, {-1}};
    CHECK_FALSE(solve_cnf(contradiction).satisfiable());
    CnfInstance empty_clause;
    empty_clause.num_vars = 1;
    empty_clause.clauses = {{}};
    CHECK_FALSE(solve_cnf(empty_clause).satisfiable());
    CnfInstance tautology;
    tautology.num_vars = 1;
    tautology.clauses = {{1, -1}};
    CHECK(solve_cnf(tautology).satisfiable());
}

TEST_CASE("pigeonhole formulas are unsatisfiable") {
    for (int holes = 1; holes <= 6; ++holes) {
        CHECK_FALSE(solve_cnf(pigeonhole(holes)).satisfiable());
    }
}

TEST_CASE("hints restrict the built-in solver only") {
    CnfInstance cnf;
    cnf.num_vars = 2;
    cnf.clauses = {{1, 2}};
    const Literal hints[] = {-1};
    const SatResult r = solve_cnf(cnf, {}, hints);
    REQUIRE(r.satisfiable());
    CHECK_FALSE(r.value(1));
    CHECK(r.value(2));
}

TEST_CASE("property: CDCL agrees with exhaustive search and returns valid models") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 14);
        const std::size_t clauses = rng() % static_cast<std::size_t>(6 * vars);
        const CnfInstance cnf = random_ksat(vars, clauses, 1 + static_cast<int>(rng() % 3), rng);
        const SatResult r = solve_cnf(cnf);
        CHECK(r.satisfiable() == brute_satisfiable(cnf));
        if (r.satisfiable()) {
            CHECK(evaluate(cnf, r.model));
        }
    }
}

TEST_CASE("property: CDCL is deterministic and handles larger random 3-SAT") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const CnfInstance cnf = random_ksat(120, 500, 3, rng);
        const SatResult a = solve_cnf(cnf);
        const SatResult b = solve_cnf(cnf);
        CHECK(a.status == b.status);
        CHECK(a.model == b.model);
        if (a.satisfiable()) {
            CHECK(evaluate(cnf, a.model));
        }
    }
}

TEST_CASE("solver output dialects") {
    const SatResult comp = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
    REQUIRE(comp.satisfiable());
    CHECK(comp.value(1));
    CHECK_FALSE(comp.value(2));
    CHECK(comp.value(3));
    const SatResult mini = parse_solver_output("SAT\n-1 2 0\n", 2);
    REQUIRE(mini.satisfiable());
    CHECK(mini.value(2));
    CHECK_FALSE(parse_solver_output("s UNSATISFIABLE\n", 2).satisfiable());
    CHECK_FALSE(parse_solver_output("UNSAT\n", 2).satisfiable());
    CHECK_THROWS_AS(parse_solver_output("hello\n", 2), BackendFailure);
    CHECK_THROWS_AS(parse_solver_output("s UNKNOWN\n", 2), BackendFailure);
    CHECK_THROWS_AS(parse_solver_output("INDET\n", 2), BackendFailure);
}

TEST_CASE("external backend through the command-line solver") {
    std::mt19937_64 rng(29);
    const SatBackend competition = SatBackend::external(solver_path + " solve --dialect competition");
    const SatBackend minisat = SatBackend::external(solver_path + " solve --dialect minisat {in} {out}");
    for (int trial = 0; trial < 15; ++trial) {
        const CnfInstance cnf = random_ksat(10, 30 + rng() % 30, 3, rng);
        const bool expected = solve_cnf(cnf).satisfiable();
        for (const SatBackend *backend : {&competition, &minisat}) {
            const SatResult r = solve_cnf(cnf, *backend);
            CHECK(r.satisfiable() == expected);
            if (r.satisfiable()) {
                CHECK(evaluate(cnf, r.model));
            }
        }
    }
}

TEST_CASE("external backend failures are distinct from UNSAT") {
    CnfInstance cnf;
    cnf.num_vars = 1;
    cnf.clauses = {{1}};
    CHECK_THROWS_AS(solve_cnf(cnf, SatBackend::external("/nonexistent/solver")), BackendFailure);
    CHECK_THROWS_AS(solve_cnf(cnf, SatBackend::external("echo garbage #")), BackendFailure);
    CHECK_THROWS_AS(solve_cnf(cnf, SatBackend::external("kill -SEGV $$ #")), BackendFailure);
    // A model that violates the formula is rejected.
    CHECK_THROWS_AS(solve_cnf(cnf, SatBackend::external("echo s SATISFIABLE; echo v -1 0 #")), BackendFailure);
    CHECK_FALSE(solve_cnf(cnf, SatBackend::external("echo s UNSATISFIABLE #")).satisfiable());
}
