#pragma once

#include "orderdraw/graph.hpp"
#include "orderdraw/sat.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace orderdraw {

/// Sequential-counter clauses for "at most k of `vars` are true". Counter
/// variables are numbered first_aux, first_aux+1, ... row by row
/// (s(i,j) = first_aux + (i-1)k + (j-1)). For n = |vars| >= 2 and k >= 1
/// this uses (n-1)k counters and 2nk + n - 3k - 1 clauses. k = 0 yields one
/// negative unit per variable; a single variable with k >= 1 yields nothing.
struct AtMostK {
    std::vector<Clause> clauses;
    std::size_t aux_vars = 0;
};
AtMostK sinz_at_most_k(std::span<const Literal> vars, std::size_t k, Literal first_aux);

/// CNF that is satisfiable iff removing at most k vertices leaves `g`
/// bipartite. For n >= 2, k >= 1: (n-1)(k+3)+3 variables and
/// 2m + 2nk + 2n - 3k - 1 clauses.
CnfInstance encode_oct(const SimpleGraph &g, std::size_t k);

enum class OctMethod { SatExact, Greedy, Anneal, Genetic, Brute };
std::string to_string(OctMethod method);

struct OctResult {
    std::vector<VertexId> removed; // sorted
    OctMethod method = OctMethod::SatExact;
    bool optimal = false;
    std::uint64_t iterations = 0; // SAT calls, greedy rounds, annealing steps or generations
};

enum class KSearch { Linear, Binary };

/// Minimum odd cycle transversal through repeated SAT calls.
/// Throws BackendFailure.
OctResult min_oct_exact(const SimpleGraph &g, KSearch search = KSearch::Linear,
                        const SatBackend &backend = {});

/// Repeatedly removes the vertex lying on the most odd cycles found by BFS.
OctResult oct_greedy(const SimpleGraph &g);

struct AnnealParams {
    double initial_temperature = 1.0;
    double cooling = 0.995;
    std::size_t steps = 10000;
    double conflict_weight = 2.0;
};
OctResult oct_anneal(const SimpleGraph &g, std::uint64_t seed, const AnnealParams &params = {});

struct GeneticParams {
    std::size_t population = 50;
    double mutation_rate = 0.05;
    std::size_t generations = 200;
};
OctResult oct_genetic(const SimpleGraph &g, std::uint64_t seed, const GeneticParams &params = {});

/// Exhaustive search by increasing cardinality. Throws TooLarge above
/// `max_vertices`.
OctResult brute_force_oct(const SimpleGraph &g, std::size_t max_vertices = 20);

/// Re-inserts removed vertices while the graph stays bipartite, leaving an
/// inclusion-minimal transversal. Vertices are tried in ascending order.
std::vector<VertexId> peel_to_minimal(const SimpleGraph &g, std::vector<VertexId> removed);

bool is_transversal(const SimpleGraph &g, std::span<const VertexId> removed);
/// No single removed vertex can be put back without creating an odd cycle.
bool is_inclusion_minimal(const SimpleGraph &g, std::span<const VertexId> removed);

} // namespace orderdraw
