#include "orderdraw/oct.hpp"

#include "orderdraw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

namespace orderdraw {

std::string to_string(OctMethod method) {
    switch (method) {
    case OctMethod::SatExact:
        return "sat-exact";
    case OctMethod::Greedy:
        return "greedy";
    case OctMethod::Anneal:
        return "anneal";
    case OctMethod::Genetic:
        return "genetic";
    case OctMethod::Brute:
        return "brute";
    }
    return "unknown";
}

AtMostK sinz_at_most_k(std::span<const Literal> vars, std::size_t k, Literal first_aux) {
    AtMostK out;
    const std::size_t n = vars.size();
    if (k == 0) {
        for (Literal x : vars) {
            out.clauses.push_back({-x});
        }
        return out;
    }
    if (n < 2) {
        return out;
    }
    out.aux_vars = (n - 1) * k;
    // i in 1..n-1, j in 1..k
    auto s = [&](std::size_t i, std::size_t j) {
        return first_aux + static_cast<Literal>((i - 1) * k + (j - 1));
    };
    auto x = [&](std::size_t i) { return vars[i - 1]; };

    out.clauses.push_back({-x(1), s(1, 1)});
    for (std::size_t j = 2; j <= k; ++j) {
        out.clauses.push_back({-s(1, j)});
    }
    for (std::size_t i = 2; i < n; ++i) {
        out.clauses.push_back({-x(i), s(i, 1)});
        out.clauses.push_back({-s(i - 1, 1), s(i, 1)});
        for (std::size_t j = 2; j <= k; ++j) {
            out.clauses.push_back({-x(i), -s(i - 1, j - 1), s(i, j)});
            out.clauses.push_back({-s(i - 1, j), s(i, j)});
        }
        out.clauses.push_back({-x(i), -s(i - 1, k)});
    }
    out.clauses.push_back({-x(n), -s(n - 1, k)});
    return out;
}

CnfInstance encode_oct(const SimpleGraph &g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    const OctVariables vars{n, k};
    CnfInstance cnf;
    cnf.var_map = vars;

    for (std::size_t i = 1; i <= n; ++i) {
        cnf.clauses.push_back({vars.partition(i, 1), vars.partition(i, 2), vars.partition(i, 3)});
    }
    for (const auto &[u, v] : g.edges()) {
        cnf.clauses.push_back({-vars.partition(u + 1, 1), -vars.partition(v + 1, 1)});
        cnf.clauses.push_back({-vars.partition(u + 1, 2), -vars.partition(v + 1, 2)});
    }
    std::vector<Literal> removal;
    removal.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        removal.push_back(vars.partition(i, 3));
    }
    AtMostK counter = sinz_at_most_k(removal, k, static_cast<Literal>(3 * n + 1));
    cnf.clauses.insert(cnf.clauses.end(), std::make_move_iterator(counter.clauses.begin()),
                       std::make_move_iterator(counter.clauses.end()));
    cnf.num_vars = static_cast<int>(3 * n + counter.aux_vars);
    return cnf;
}

bool is_transversal(const SimpleGraph &g, std::span<const VertexId> removed) {
    return bipartite_check(g, removed).bipartite();
}

std::vector<VertexId> peel_to_minimal(const SimpleGraph &g, std::vector<VertexId> removed) {
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId v : removed) {
        mask.at(v) = true;
    }
    // One pass suffices: a vertex rejected against a subset of the final
    // kept set stays rejected against the final set.
    std::vector<VertexId> kept_removed;
    for (VertexId v : removed) {
        mask[v] = false;
        if (!is_bipartite_without(g, mask)) {
            mask[v] = true;
            kept_removed.push_back(v);
        }
    }
    return kept_removed;
}

bool is_inclusion_minimal(const SimpleGraph &g, std::span<const VertexId> removed) {
    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId v : removed) {
        mask.at(v) = true;
    }
    for (VertexId v : removed) {
        mask[v] = false;
        const bool bipartite = is_bipartite_without(g, mask);
        mask[v] = true;
        if (bipartite) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<VertexId> decode_removed(const CnfInstance &cnf, const SatResult &result) {
    const OctVariables &vars = *cnf.var_map;
    std::vector<VertexId> removed;
    for (std::size_t i = 1; i <= vars.vertices; ++i) {
        if (result.value(vars.partition(i, 3))) {
            removed.push_back(i - 1);
        }
    }
    return removed;
}

// The lowest vertex of every connected component may be kept out of the
// second colour class without loss of generality.
std::vector<Literal> colour_symmetry_hints(const SimpleGraph &g) {
    const std::size_t n = g.vertex_count();
    const OctVariables vars{n, 0};
    std::vector<bool> visited(n, false);
    std::vector<Literal> hints;
    for (VertexId root = 0; root < n; ++root) {
        if (visited[root]) {
            continue;
        }
        hints.push_back(-vars.partition(root + 1, 2));
        std::queue<VertexId> queue;
        queue.push(root);
        visited[root] = true;
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            for (VertexId v : g.neighbors(u)) {
                if (!visited[v]) {
                    visited[v] = true;
                    queue.push(v);
                }
            }
        }
    }
    return hints;
}

using Rng = std::mt19937_64;

std::size_t below(Rng &rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

double unit_real(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

OctResult min_oct_exact(const SimpleGraph &g, KSearch search, const SatBackend &backend) {
    OctResult result;
    result.method = OctMethod::SatExact;
    result.optimal = true;
    result.iterations = 1; // the k = 0 test
    if (bipartite_check(g).bipartite()) {
        return result;
    }

    // Hints are encoded with the k-independent vertex variables only.
    const std::vector<Literal> hints = colour_symmetry_hints(g);
    auto attempt = [&](std::size_t k) -> std::optional<std::vector<VertexId>> {
        ++result.iterations;
        const CnfInstance cnf = encode_oct(g, k);
        const SatResult sat = solve_cnf(cnf, backend, hints);
        if (!sat.satisfiable()) {
            return std::nullopt;
        }
        return decode_removed(cnf, sat);
    };

    std::vector<VertexId> best;
    if (search == KSearch::Linear) {
        for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
            if (auto removed = attempt(k)) {
                best = std::move(*removed);
                break;
            }
        }
    } else {
        // Any transversal bounds the optimum from above.
        std::size_t lo = 1;
        std::size_t hi = std::max<std::size_t>(oct_greedy(g).removed.size(), 1);
        std::optional<std::size_t> solved_at;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (auto removed = attempt(mid)) {
                best = std::move(*removed);
                solved_at = mid;
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if (solved_at != lo) {
            auto removed = attempt(lo);
            if (!removed) {
                throw Error("SAT verdicts are not monotone in k");
            }
            best = std::move(*removed);
        }
    }
    const std::size_t count = best.size();
    result.removed = peel_to_minimal(g, std::move(best));
    if (result.removed.size() != count || !is_transversal(g, result.removed)) {
        throw Error("decoded SAT model is not a minimum transversal");
    }
    return result;
}

namespace {

// First odd cycle met by a BFS rooted at `root` inside its component.
std::vector<VertexId> odd_cycle_from(const SimpleGraph &g, const std::vector<bool> &removed, VertexId root) {
    const std::size_t n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::vector<VertexId> parent(n, n);
    std::vector<std::size_t> depth(n, 0);
    std::queue<VertexId> queue;
    colour[root] = 0;
    parent[root] = root;
    queue.push(root);
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop();
        for (VertexId v : g.neighbors(u)) {
            if (removed[v]) {
                continue;
            }
            if (colour[v] < 0) {
                colour[v] = 1 - colour[u];
                parent[v] = u;
                depth[v] = depth[u] + 1;
                queue.push(v);
            } else if (colour[v] == colour[u]) {
                std::vector<VertexId> cycle{u, v};
                VertexId a = u;
                VertexId b = v;
                while (depth[a] > depth[b]) {
                    a = parent[a];
                    cycle.push_back(a);
                }
                while (depth[b] > depth[a]) {
                    b = parent[b];
                    cycle.push_back(b);
                }
                while (a != b) {
                    a = parent[a];
                    b = parent[b];
                    cycle.push_back(a);
                    cycle.push_back(b);
                }
                std::sort(cycle.begin(), cycle.end());
                cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
                return cycle;
            }
        }
    }
    return {};
}

} // namespace

OctResult oct_greedy(const SimpleGraph &g) {
    const std::size_t n = g.vertex_count();
    OctResult result;
    result.method = OctMethod::Greedy;
    std::vector<bool> removed(n, false);
    std::vector<VertexId> chosen;
    while (!is_bipartite_without(g, removed)) {
        ++result.iterations;
        std::vector<std::size_t> hits(n, 0);
        for (VertexId root = 0; root < n; ++root) {
            if (removed[root]) {
                continue;
            }
            for (VertexId v : odd_cycle_from(g, removed, root)) {
                ++hits[v];
            }
        }
        const auto best = static_cast<VertexId>(std::max_element(hits.begin(), hits.end()) - hits.begin());
        removed[best] = true;
        chosen.push_back(best);
    }
    result.removed = peel_to_minimal(g, std::move(chosen));
    return result;
}

OctResult oct_anneal(const SimpleGraph &g, std::uint64_t seed, const AnnealParams &params) {
    const std::size_t n = g.vertex_count();
    OctResult result;
    result.method = OctMethod::Anneal;
    if (n == 0) {
        return result;
    }
    Rng rng(seed);

    // label 0 / 1: colour class, 2: removed
    constexpr int removed_label = 2;
    std::vector<int> label(n, 0);
    {
        const Bipartition start = bipartite_check(g);
        if (start.bipartite()) {
            return result;
        }
        // BFS colouring as a warm start; conflicts are resolved by the walk.
        std::vector<int> colour(n, -1);
        for (VertexId root = 0; root < n; ++root) {
            if (colour[root] >= 0) {
                continue;
            }
            colour[root] = 0;
            std::queue<VertexId> queue;
            queue.push(root);
            while (!queue.empty()) {
                const VertexId u = queue.front();
                queue.pop();
                for (VertexId v : g.neighbors(u)) {
                    if (colour[v] < 0) {
                        colour[v] = 1 - colour[u];
                        queue.push(v);
                    }
                }
            }
        }
        label = colour;
    }

    auto conflicts_at = [&](VertexId v, int as) {
        if (as == removed_label) {
            return std::size_t{0};
        }
        std::size_t c = 0;
        for (VertexId u : g.neighbors(v)) {
            c += label[u] == as ? 1 : 0;
        }
        return c;
    };
    std::size_t conflicts = 0;
    std::size_t removed_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        conflicts += conflicts_at(v, label[v]);
    }
    conflicts /= 2;

    std::vector<int> best_label;
    std::size_t best_removed = n + 1;
    double temperature = params.initial_temperature;
    for (std::size_t step = 0; step < params.steps; ++step) {
        ++result.iterations;
        const VertexId v = below(rng, n);
        const int from = label[v];
        int to = static_cast<int>(below(rng, 2));
        if (to >= from) {
            ++to;
        }
        const auto conflict_delta =
            static_cast<double>(conflicts_at(v, to)) - static_cast<double>(conflicts_at(v, from));
        const double removal_delta = (to == removed_label ? 1.0 : 0.0) - (from == removed_label ? 1.0 : 0.0);
        const double delta = removal_delta + params.conflict_weight * conflict_delta;
        if (delta <= 0.0 || unit_real(rng) < std::exp(-delta / std::max(temperature, 1e-12))) {
            conflicts = conflicts + conflicts_at(v, to) - conflicts_at(v, from);
            label[v] = to;
            if (to == removed_label) {
                ++removed_count;
            }
            if (from == removed_label) {
                --removed_count;
            }
            if (conflicts == 0 && removed_count < best_removed) {
                best_removed = removed_count;
                best_label = label;
            }
        }
        temperature *= params.cooling;
    }

    if (best_label.empty()) {
        // Repair the final state: drop one endpoint of every remaining conflict.
        best_label = label;
        for (const auto &[u, v] : g.edges()) {
            if (best_label[u] != removed_label && best_label[u] == best_label[v]) {
                best_label[std::max(u, v)] = removed_label;
            }
        }
    }
    std::vector<VertexId> removed;
    for (VertexId v = 0; v < n; ++v) {
        if (best_label[v] == removed_label) {
            removed.push_back(v);
        }
    }
    result.removed = peel_to_minimal(g, std::move(removed));
    return result;
}

namespace {

// Union-find keeping the colour parity of every vertex relative to its root.
class ParityForest {
public:
    explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    std::pair<VertexId, int> find(VertexId v) {
        int parity = 0;
        VertexId root = v;
        while (parent_[root] != root) {
            parity ^= parity_[root];
            root = parent_[root];
        }
        // compress
        int running = parity;
        while (parent_[v] != root) {
            const VertexId next = parent_[v];
            const int step = parity_[v];
            parent_[v] = root;
            parity_[v] = running;
            running ^= step;
            v = next;
        }
        return {root, parity};
    }

    // colour(a) xor colour(b) == d
    void unite(VertexId a, VertexId b, int d) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            return;
        }
        if (rank_[ra] > rank_[rb]) {
            std::swap(ra, rb);
        }
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ d;
        if (rank_[ra] == rank_[rb]) {
            ++rank_[rb];
        }
    }

private:
    std::vector<VertexId> parent_;
    std::vector<int> parity_;
    std::vector<int> rank_;
};

// Inserts vertices in the given order whenever the kept subgraph stays
// bipartite; the rejected vertices form an inclusion-minimal transversal.
std::vector<VertexId> decode_order(const SimpleGraph &g, const std::vector<VertexId> &order) {
    const std::size_t n = g.vertex_count();
    ParityForest forest(n);
    std::vector<bool> kept(n, false);
    std::vector<VertexId> removed;
    std::vector<std::pair<VertexId, int>> required;
    for (VertexId v : order) {
        required.clear();
        bool ok = true;
        for (VertexId u : g.neighbors(v)) {
            if (!kept[u]) {
                continue;
            }
            auto [root, parity] = forest.find(u);
            const int need = parity ^ 1;
            auto it = std::find_if(required.begin(), required.end(),
                                   [root = root](const auto &entry) { return entry.first == root; });
            if (it == required.end()) {
                required.emplace_back(root, need);
            } else if (it->second != need) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            removed.push_back(v);
            continue;
        }
        kept[v] = true;
        for (const auto &[root, need] : required) {
            forest.unite(v, root, need);
        }
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

std::vector<VertexId> order_crossover(const std::vector<VertexId> &a, const std::vector<VertexId> &b, Rng &rng) {
    const std::size_t n = a.size();
    std::size_t lo = below(rng, n);
    std::size_t hi = below(rng, n);
    if (lo > hi) {
        std::swap(lo, hi);
    }
    std::vector<VertexId> child(n);
    std::vector<bool> taken(n, false);
    for (std::size_t i = lo; i <= hi; ++i) {
        child[i] = a[i];
        taken[a[i]] = true;
    }
    std::size_t pos = (hi + 1) % n;
    for (std::size_t step = 0; step < n; ++step) {
        const VertexId gene = b[(hi + 1 + step) % n];
        if (taken[gene]) {
            continue;
        }
        child[pos] = gene;
        taken[gene] = true;
        pos = (pos + 1) % n;
    }
    return child;
}

} // namespace

OctResult oct_genetic(const SimpleGraph &g, std::uint64_t seed, const GeneticParams &params) {
    const std::size_t n = g.vertex_count();
    OctResult result;
    result.method = OctMethod::Genetic;
    if (n == 0 || bipartite_check(g).bipartite()) {
        return result;
    }
    Rng rng(seed);
    const std::size_t pop_size = std::max<std::size_t>(params.population, 2);

    struct Individual {
        std::vector<VertexId> order;
        std::vector<VertexId> removed;
    };
    auto evaluate_individual = [&](std::vector<VertexId> order) {
        Individual ind{std::move(order), {}};
        ind.removed = decode_order(g, ind.order);
        return ind;
    };
    auto fitter = [](const Individual &x, const Individual &y) {
        return x.removed.size() < y.removed.size() ||
               (x.removed.size() == y.removed.size() && x.removed < y.removed);
    };

    std::vector<Individual> population;
    population.reserve(pop_size);
    std::vector<VertexId> identity(n);
    std::iota(identity.begin(), identity.end(), VertexId{0});
    population.push_back(evaluate_individual(identity));
    while (population.size() < pop_size) {
        std::vector<VertexId> order = identity;
        std::shuffle(order.begin(), order.end(), rng);
        population.push_back(evaluate_individual(std::move(order)));
    }

    auto tournament = [&]() -> const Individual & {
        const Individual &x = population[below(rng, population.size())];
        const Individual &y = population[below(rng, population.size())];
        return fitter(y, x) ? y : x;
    };

    for (std::size_t gen = 0; gen < params.generations; ++gen) {
        ++result.iterations;
        std::sort(population.begin(), population.end(), fitter);
        std::vector<Individual> next;
        next.reserve(pop_size);
        next.push_back(population.front());
        while (next.size() < pop_size) {
            std::vector<VertexId> child = order_crossover(tournament().order, tournament().order, rng);
            for (std::size_t i = 0; i < n; ++i) {
                if (unit_real(rng) < params.mutation_rate) {
                    std::swap(child[i], child[below(rng, n)]);
                }
            }
            next.push_back(evaluate_individual(std::move(child)));
        }
        population = std::move(next);
    }
    const Individual &best = *std::min_element(population.begin(), population.end(), fitter);
    result.removed = peel_to_minimal(g, best.removed);
    return result;
}

OctResult brute_force_oct(const SimpleGraph &g, std::size_t max_vertices) {
    const std::size_t n = g.vertex_count();
    if (n > max_vertices) {
        throw TooLarge("brute-force transversal search limited to " + std::to_string(max_vertices) +
                       " vertices, graph has " + std::to_string(n));
    }
    OctResult result;
    result.method = OctMethod::Brute;
    result.optimal = true;
    std::vector<bool> mask(n, false);
    for (std::size_t k = 0; k <= n; ++k) {
        // Lexicographic k-subsets via index vector.
        std::vector<VertexId> pick(k);
        std::iota(pick.begin(), pick.end(), VertexId{0});
        while (true) {
            ++result.iterations;
            std::fill(mask.begin(), mask.end(), false);
            for (VertexId v : pick) {
                mask[v] = true;
            }
            if (is_bipartite_without(g, mask)) {
                result.removed = pick;
                return result;
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return result;
}

} // namespace orderdraw
