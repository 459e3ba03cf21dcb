#include <holeforge/class_lab.hpp>
#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>
#include <holeforge/subgraph.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace holeforge {

namespace {
    void require_cap(const char * what, int n, int cap)
    {
        if (n > cap)
            throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }

    struct BipartitionSearch
    {
        int n, omega;
        std::vector<std::vector<int>> cliques_of;
        // count[side][c]: members of clique c placed on that side
        std::vector<int> count[2];
        std::vector<int> side;

        auto place(Vertex v, int s) -> bool
        {
            bool ok = true;
            for (auto c : cliques_of[v])
                if (++count[s][c] == omega)
                    ok = false;
            side[v] = s;
            return ok;
        }

        void unplace(Vertex v)
        {
            for (auto c : cliques_of[v])
                --count[side[v]][c];
            side[v] = -1;
        }

        auto solve(Vertex v) -> bool
        {
            if (v == n)
                return true;
            for (int s = 0; s < (v == 0 ? 1 : 2); ++s) {
                auto ok = place(v, s);
                if (ok && solve(v + 1))
                    return true;
                unplace(v);
            }
            return false;
        }
    };
}

auto check_bipartition_conjecture(const Graph & g, int vertex_cap) -> std::optional<std::pair<VertexSet, VertexSet>>
{
    auto n = g.vertex_count();
    require_cap("check_bipartition_conjecture", n, vertex_cap);
    if (auto hole = has_long_hole(g))
        throw InputError("check_bipartition_conjecture: graph has a hole of length " + std::to_string(hole->size()));
    if (n == 0)
        return std::pair{g.empty_set(), g.empty_set()};

    auto cliques = maximum_cliques(g);
    BipartitionSearch s{n, static_cast<int>(cliques.front().size()), std::vector<std::vector<int>>(n), {}, std::vector<int>(n, -1)};
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (auto v : cliques[c])
            s.cliques_of[v].push_back(static_cast<int>(c));
    s.count[0].assign(cliques.size(), 0);
    s.count[1].assign(cliques.size(), 0);
    if (! s.solve(0))
        return std::nullopt;

    std::pair result{g.empty_set(), g.empty_set()};
    for (Vertex v = 0; v < n; ++v)
        (s.side[v] == 0 ? result.first : result.second).insert(v);
    return result;
}

auto check_chi_omega_sq(const Graph & g, const SolverOptions & options) -> ChiOmegaVerdict
{
    ChiOmegaVerdict v;
    v.omega = clique_number(g).size;
    v.omega_squared = v.omega * v.omega;
    v.chi = chromatic_number(g, options);
    if (v.chi.upper <= v.omega_squared)
        v.holds = true;
    else if (v.chi.lower > v.omega_squared)
        v.holds = false;
    else
        throw CapExceeded("check_chi_omega_sq: chromatic number timed out between " + std::to_string(v.chi.lower) + " and "
                + std::to_string(v.chi.upper));
    return v;
}

auto f4_search(const F4Budget & budget) -> F4Record
{
    F4Record r;
    r.omega = budget.omega;
    SolverOptions options{64, budget.timeout_seconds};

    auto consider = [&](const Graph & g, const std::string & source) {
        if (g.vertex_count() > 64 || clique_number(g).size != budget.omega || has_long_hole(g))
            return;
        ++r.graphs_examined;
        auto chi = chromatic_number(g, options);
        if (! chi.exact()) {
            ++r.unknown;
            return;
        }
        if (chi.value() > r.best_chi) {
            r.best_chi = chi.value();
            r.witness = g;
            r.source = source;
        }
    };

    EnumerationOptions enumeration;
    enumeration.cap = std::max(budget.exhaustive_n, 0);
    enumeration.hereditary = [&](const Graph & g) { return clique_number(g).size <= budget.omega && ! has_long_hole(g); };
    for (int n = 1; n <= budget.exhaustive_n; ++n)
        enumerate_graphs(n, {}, [&](const Graph & g) { consider(g, "exhaustive n=" + std::to_string(n)); }, enumeration);

    // joins of two cliquewise-small long-hole-free graphs
    std::vector<Graph> pool{complete(1), complete(2), complete(3), antihole(7), antihole(6)};
    auto join = complete(2);
    for (auto & a : pool)
        for (auto & b : pool)
            if (a.vertex_count() <= b.vertex_count()) {
                std::vector<Graph> parts{a, b};
                consider(substitute(join, parts), "join");
            }

    CorpusParams params;
    params.seed = budget.seed;
    params.count = budget.substitution_trials;
    params.n_min = 2;
    params.n_max = budget.substitution_max_n;
    corpus(CorpusKind::substitution_closure, params, [&](const Graph & g) { consider(g, "substitution"); });

    params.count = budget.random_trials;
    params.n_max = budget.random_max_n;
    params.n_min = std::min(budget.omega, params.n_max);
    corpus(CorpusKind::random_long_hole_free, params, [&](const Graph & g) { consider(g, "random"); });
    return r;
}

auto gyarfas_slack(const Graph & g, int vertex_cap) -> SlackReport
{
    auto n = g.vertex_count();
    require_cap("gyarfas_slack", n, std::min(vertex_cap, 26));

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    auto subsets = std::size_t{1} << n;
    std::vector<std::uint8_t> omega(subsets, 0), alpha(subsets, 0);

    SlackReport r;
    r.witness = g.empty_set();
    std::uint32_t best = 0;
    for (std::uint32_t s = 1; s < subsets; ++s) {
        auto v = std::countr_zero(s);
        auto rest = s & (s - 1);
        omega[s] = std::max<int>(omega[rest], 1 + omega[rest & adj[v]]);
        alpha[s] = std::max<int>(alpha[rest], 1 + alpha[rest & ~adj[v]]);
        auto gap = std::popcount(s) - alpha[s] * omega[s];
        if (gap > r.slack) {
            r.slack = gap;
            best = s;
        }
    }
    for (auto m = best; m; m &= m - 1)
        r.witness.insert(std::countr_zero(m));
    r.witness_alpha = alpha[best];
    r.witness_omega = omega[best];
    return r;
}

auto max_anticomplete_odd_holes(const Graph & g, int vertex_cap, std::size_t hole_cap) -> AnticompleteHoles
{
    auto n = g.vertex_count();
    require_cap("max_anticomplete_odd_holes", n, vertex_cap);

    std::vector<Cycle> holes;
    if (n >= 5)
        for_each_induced_cycle(g, 5, n, [&](std::span<const Vertex> c) {
            if (c.size() % 2 == 1) {
                if (holes.size() == hole_cap)
                    throw CapExceeded("max_anticomplete_odd_holes: more than " + std::to_string(hole_cap) + " odd holes");
                holes.emplace_back(c.begin(), c.end());
            }
            return false;
        });

    auto h = static_cast<int>(holes.size());
    std::vector<VertexSet> closed;
    std::vector<VertexSet> members;
    for (auto & c : holes) {
        members.push_back(VertexSet::from_range(n, c));
        auto reach = members.back();
        for (auto v : c)
            reach |= g.neighbours(v);
        closed.push_back(std::move(reach));
    }
    Graph compatible(h);
    for (int a = 0; a < h; ++a)
        for (int b = a + 1; b < h; ++b)
            if (! closed[a].intersects(members[b]))
                compatible.add_edge(a, b);

    AnticompleteHoles r;
    auto best = clique_number(compatible);
    r.count = best.size;
    for (auto i : best.witness)
        r.holes.push_back(holes[i]);
    return r;
}

auto eh_exponent(const Graph & g) -> EHReport
{
    if (g.vertex_count() < 2)
        throw InputError("eh_exponent: need at least 2 vertices");
    EHReport r;
    r.n = g.vertex_count();
    r.alpha = stability_number(g).size;
    r.omega = clique_number(g).size;
    r.exponent = std::log(static_cast<double>(std::max(r.alpha, r.omega))) / std::log(static_cast<double>(r.n));
    return r;
}

auto verify_antichain(std::vector<Graph> graphs) -> AntichainReport
{
    AntichainReport r;
    r.graphs = std::move(graphs);
    for (std::size_t i = 0; i < r.graphs.size() && r.is_antichain; ++i)
        for (std::size_t j = 0; j < r.graphs.size(); ++j)
            if (i != j && is_induced_subgraph(r.graphs[i], r.graphs[j])) {
                r.is_antichain = false;
                r.offending = std::pair{i, j};
                break;
            }
    return r;
}

auto enumerate_connected_4_regular(int n, int n_cap) -> std::vector<Graph>
{
    if (n < 5)
        throw InputError("enumerate_connected_4_regular: no connected 4-regular graph has fewer than 5 vertices");
    require_cap("enumerate_connected_4_regular", n, n_cap);
    EnumerationOptions options;
    options.cap = n;
    options.hereditary = [](const Graph & g) { return g.max_degree() <= 4; };
    return enumerate_graphs(n, [](const Graph & g) { return g.min_degree() == 4 && is_connected(g); }, options);
}

auto ForbiddenSequenceRealization::admits(const Graph & g) const -> bool
{
    return class_membership(g, selected);
}

auto realize_forbidden_sequence(const std::vector<int> & requested, int n_cap) -> ForbiddenSequenceRealization
{
    ForbiddenSequenceRealization r;
    r.requested = requested;
    for (std::size_t i = 0; i < requested.size(); ++i) {
        ForbiddenSize size;
        size.n = static_cast<int>(i) + 1;
        size.requested = requested[i];
        if (size.requested < 0)
            throw InputError("realize_forbidden_sequence: negative count");
        if (size.requested == 0) {
            size.feasible = true;
        }
        else if (size.n < 5) {
            size.available = 0;
        }
        else if (size.n <= n_cap) {
            auto found = enumerate_connected_4_regular(size.n, n_cap);
            size.available = static_cast<int>(found.size());
            size.feasible = *size.available >= size.requested;
            auto take = std::min<std::size_t>(found.size(), static_cast<std::size_t>(size.requested));
            r.selected.insert(r.selected.end(), found.begin(), found.begin() + static_cast<std::ptrdiff_t>(take));
        }
        r.sizes.push_back(size);
    }
    return r;
}

auto class_membership(const Graph & g, const std::vector<Graph> & forbidden) -> bool
{
    return std::none_of(forbidden.begin(), forbidden.end(), [&](const Graph & f) { return is_induced_subgraph(f, g).has_value(); });
}

auto is_planar(const Graph & g) -> bool
{
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> b(g.vertex_count());
    for (auto [u, v] : g.edges())
        boost::add_edge(u, v, b);
    return boost::boyer_myrvold_planarity_test(b);
}

auto to_string(CorpusKind k) -> std::string
{
    switch (k) {
    case CorpusKind::random_chordal: return "random_chordal";
    case CorpusKind::random_long_hole_free: return "random_long_hole_free";
    case CorpusKind::substitution_closure: return "substitution_closure";
    case CorpusKind::exhaustive: return "exhaustive";
    }
    return "?";
}

auto parse_corpus_kind(const std::string & name) -> CorpusKind
{
    for (auto k : {CorpusKind::random_chordal, CorpusKind::random_long_hole_free, CorpusKind::substitution_closure, CorpusKind::exhaustive})
        if (to_string(k) == name)
            return k;
    throw InputError("unknown corpus kind '" + name + "'");
}

namespace {
    using Rng = std::mt19937_64;

    auto uniform(Rng & rng, int lo, int hi) -> int { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    auto coin(Rng & rng, double p) -> bool { return std::bernoulli_distribution(p)(rng); }

    // Each new vertex attaches to a subset of a clique through a random
    // earlier vertex, so it is simplicial when added.
    auto random_chordal(Rng & rng, int n, double p) -> Graph
    {
        Graph g(n);
        for (Vertex v = 1; v < n; ++v) {
            auto u = uniform(rng, 0, v - 1);
            auto candidates = g.neighbours(u).to_vector();
            std::shuffle(candidates.begin(), candidates.end(), rng);
            std::vector<Vertex> clique{u};
            for (auto w : candidates)
                if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.adjacent(w, x); }))
                    clique.push_back(w);
            g.add_edge(v, u);
            for (std::size_t i = 1; i < clique.size(); ++i)
                if (coin(rng, p))
                    g.add_edge(v, clique[i]);
        }
        return g;
    }

    // Add vertices one by one with random neighbourhoods, rejecting any that
    // creates a long hole; after repeated rejections the vertex becomes a leaf.
    auto random_long_hole_free(Rng & rng, int n, double p) -> Graph
    {
        Graph g(0);
        for (Vertex v = 0; v < n; ++v) {
            Graph next(0);
            bool placed = false;
            for (int attempt = 0; attempt < 20 && ! placed; ++attempt) {
                next = disjoint_union(g, Graph(1));
                for (Vertex u = 0; u < v; ++u)
                    if (coin(rng, p))
                        next.add_edge(u, v);
                placed = ! has_long_hole(next);
            }
            if (! placed) {
                next = disjoint_union(g, Graph(1));
                next.add_edge(uniform(rng, 0, v - 1), v);
            }
            g = std::move(next);
        }
        return g;
    }

    auto substituted_at(const Graph & base, Vertex v, const Graph & part) -> Graph
    {
        std::vector<Graph> parts(base.vertex_count(), complete(1));
        parts[v] = part;
        return substitute(base, parts);
    }

    auto substitution_step(Rng & rng, const Graph & g, const std::vector<Graph> & seeds, const std::vector<Graph> & pool, int n_max)
            -> std::optional<Graph>
    {
        if (coin(rng, 0.25)) {
            auto & outer = seeds[uniform(rng, 1, static_cast<int>(seeds.size()) - 1)];
            if (outer.vertex_count() - 1 + g.vertex_count() > n_max)
                return std::nullopt;
            return substituted_at(outer, uniform(rng, 0, outer.vertex_count() - 1), g);
        }
        auto choice = uniform(rng, 0, static_cast<int>(seeds.size() + pool.size()) - 1);
        auto & part = choice < static_cast<int>(seeds.size()) ? seeds[choice] : pool[choice - seeds.size()];
        if (g.vertex_count() - 1 + part.vertex_count() > n_max)
            return std::nullopt;
        return substituted_at(g, uniform(rng, 0, g.vertex_count() - 1), part);
    }
}

void corpus(CorpusKind kind, const CorpusParams & params, const GraphVisitor & visit)
{
    if (params.n_min < 0 || params.n_max < params.n_min)
        throw InputError("corpus: need 0 <= n_min <= n_max");
    if (params.count < 0)
        throw InputError("corpus: count must be non-negative");

    if (kind == CorpusKind::exhaustive) {
        EnumerationOptions options;
        options.cap = params.enumeration_cap;
        if (params.long_hole_free_only)
            options.hereditary = [](const Graph & g) { return ! has_long_hole(g); };
        for (int n = params.n_min; n <= params.n_max; ++n)
            enumerate_graphs(n, {}, visit, options);
        return;
    }

    Rng rng(params.seed);
    std::vector<Graph> seeds{complete(1), complete(2), antihole(7)};
    std::vector<Graph> pool;
    for (int i = 0; i < params.count; ++i) {
        auto n = uniform(rng, params.n_min, params.n_max);
        switch (kind) {
        case CorpusKind::random_chordal:
            visit(random_chordal(rng, n, params.edge_probability));
            break;
        case CorpusKind::random_long_hole_free:
            visit(random_long_hole_free(rng, n, params.edge_probability));
            break;
        case CorpusKind::substitution_closure: {
            auto g = seeds[uniform(rng, 0, static_cast<int>(seeds.size()) - 1)];
            for (int failures = 0; g.vertex_count() < n && failures < 8;) {
                if (auto next = substitution_step(rng, g, seeds, pool, params.n_max))
                    g = std::move(*next);
                else
                    ++failures;
            }
            if (pool.size() < 64 && g.vertex_count() > 1)
                pool.push_back(g);
            visit(g);
            break;
        }
        case CorpusKind::exhaustive:
            break;
        }
    }
}

auto corpus(CorpusKind kind, const CorpusParams & params) -> std::vector<Graph>
{
    std::vector<Graph> out;
    corpus(kind, params, [&](const Graph & g) { out.push_back(g); });
    return out;
}

} // namespace holeforge
