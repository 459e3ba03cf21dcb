#include <holeforge/errors.hpp>
#include <holeforge/holes.hpp>

#include <algorithm>

namespace holeforge {

namespace {
    // Grows induced paths from `root`; a path closes into a cycle as soon as
    // its end touches the root, and is never extended past that point.
    struct CycleDfs
    {
        const Graph & g;
        int min_len, max_len;
        bool canonical;
        const std::function<bool(std::span<const Vertex>)> & visit;
        std::vector<Vertex> path;
        bool stopped = false;

        void extend(const VertexSet & allowed, const VertexSet & blocked)
        {
            auto root = path.front();
            auto last = path.back();
            auto candidates = (g.neighbours(last) & allowed) - blocked;
            for (auto w : candidates) {
                if (path.size() >= 2 && g.adjacent(w, root)) {
                    auto len = static_cast<int>(path.size()) + 1;
                    if (len >= min_len && len <= max_len && (! canonical || path[1] < w)) {
                        path.push_back(w);
                        stopped = visit(path);
                        path.pop_back();
                        if (stopped)
                            return;
                    }
                    continue;
                }
                if (static_cast<int>(path.size()) + 2 > max_len)
                    continue;
                // the root's neighbours stay open: touching one closes the cycle
                auto next_blocked = blocked;
                if (path.size() > 1) {
                    next_blocked |= g.neighbours(last);
                    next_blocked.insert(last);
                }
                path.push_back(w);
                extend(allowed, next_blocked);
                path.pop_back();
                if (stopped)
                    return;
            }
        }

        auto run_from(Vertex root, const VertexSet & allowed) -> bool
        {
            path.assign(1, root);
            extend(allowed, VertexSet(g.vertex_count()));
            return stopped;
        }
    };

    auto stop_on(const Graph & g, int min_len, int max_len, const std::function<bool(int)> & wanted) -> std::optional<Cycle>
    {
        std::optional<Cycle> found;
        for_each_induced_cycle(g, min_len, max_len, [&](std::span<const Vertex> c) {
            if (! wanted(static_cast<int>(c.size())))
                return false;
            found = Cycle(c.begin(), c.end());
            return true;
        });
        return found;
    }

    auto bisimplicial_within(const Graph & g, Vertex v, const VertexSet & within) -> bool
    {
        // complement of g[N(v)] must be bipartite
        auto nb = g.neighbours(v) & within;
        auto unsided = nb;
        VertexSet side[2] = {VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
        while (! unsided.empty()) {
            auto start = unsided.first();
            std::vector<std::pair<Vertex, int>> stack{{start, 0}};
            unsided.erase(start);
            side[0].insert(start);
            while (! stack.empty()) {
                auto [u, s] = stack.back();
                stack.pop_back();
                auto non_nb = nb - g.neighbours(u);
                non_nb.erase(u);
                if (non_nb.intersects(side[s]))
                    return false;
                for (auto w : non_nb & unsided) {
                    unsided.erase(w);
                    side[1 - s].insert(w);
                    stack.emplace_back(w, 1 - s);
                }
            }
        }
        return true;
    }
}

auto is_induced_cycle(const Graph & g, std::span<const Vertex> cycle) -> bool
{
    auto k = static_cast<int>(cycle.size());
    if (k < 3)
        return false;
    VertexSet seen(g.vertex_count());
    for (auto v : cycle) {
        if (v < 0 || v >= g.vertex_count() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    return true;
}

auto for_each_induced_cycle(const Graph & g, int min_len, int max_len, const std::function<bool(std::span<const Vertex>)> & visit)
        -> bool
{
    if (min_len < 3 || min_len > max_len)
        throw InputError("induced cycles: need 3 <= min_len <= max_len");
    auto n = g.vertex_count();
    for (Vertex s = 0; s < n; ++s) {
        auto allowed = g.vertices();
        for (Vertex v = 0; v <= s; ++v)
            allowed.erase(v);
        CycleDfs dfs{g, min_len, max_len, true, visit, {}};
        if (dfs.run_from(s, allowed))
            return true;
    }
    return false;
}

auto enumerate_induced_cycles(const Graph & g, int min_len, int max_len, std::size_t cycle_cap) -> HoleReport
{
    HoleReport report;
    for_each_induced_cycle(g, min_len, max_len, [&](std::span<const Vertex> c) {
        if (report.cycles.size() >= cycle_cap) {
            report.truncated = true;
            return true;
        }
        report.cycles.emplace_back(c.begin(), c.end());
        return false;
    });
    return report;
}

auto has_long_hole(const Graph & g) -> std::optional<Cycle>
{
    auto n = g.vertex_count();
    std::vector<int> comp_of(n);
    for (auto [b, c] : g.edges()) {
        auto closed_b = g.neighbours(b), closed_c = g.neighbours(c);
        closed_b.insert(b);
        closed_c.insert(c);
        auto ends_a = g.neighbours(b) - closed_c;
        auto ends_d = g.neighbours(c) - closed_b;
        if (ends_a.empty() || ends_d.empty())
            continue;

        auto rest = g.vertices() - closed_b - closed_c;
        auto comps = components(g, rest);
        if (comps.empty())
            continue;
        auto k = static_cast<int>(comps.size());
        for (int i = 0; i < k; ++i)
            for (auto v : comps[i])
                comp_of[v] = i;
        auto touching = [&](Vertex x) {
            VertexSet t(k);
            for (auto w : g.neighbours(x) & rest)
                t.insert(comp_of[w]);
            return t;
        };

        std::vector<std::pair<Vertex, VertexSet>> d_touch;
        for (auto d : ends_d)
            d_touch.emplace_back(d, touching(d));
        for (auto a : ends_a) {
            auto a_touch = touching(a);
            if (a_touch.empty())
                continue;
            for (auto & [d, dt] : d_touch) {
                if (g.adjacent(a, d) || ! a_touch.intersects(dt))
                    continue;
                auto p = shortest_path(g, d, a, rest);
                Cycle hole{b, c};
                hole.insert(hole.end(), p.begin(), p.end());
                return hole;
            }
        }
    }
    return std::nullopt;
}

auto find_hole(const Graph & g) -> std::optional<Cycle>
{
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
        auto closed = g.neighbours(b);
        closed.insert(b);
        auto rest = g.vertices() - closed;
        auto nb = g.neighbours(b);
        for (auto a : nb)
            for (auto c = nb.next(a); c != -1; c = nb.next(c)) {
                if (g.adjacent(a, c))
                    continue;
                auto p = shortest_path(g, a, c, rest);
                if (p.empty())
                    continue;
                Cycle hole{b};
                hole.insert(hole.end(), p.begin(), p.end());
                return hole;
            }
    }
    return std::nullopt;
}

auto is_chordal(const Graph & g) -> ChordalResult
{
    auto n = g.vertex_count();
    std::vector<int> weight(n, 0);
    VertexSet numbered(n);
    std::vector<Vertex> visit;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (! numbered.contains(v) && (pick == -1 || weight[v] > weight[pick]))
                pick = v;
        numbered.insert(pick);
        visit.push_back(pick);
        for (auto w : g.neighbours(pick) - numbered)
            ++weight[w];
    }

    ChordalResult result;
    result.elimination_order.assign(visit.rbegin(), visit.rend());
    VertexSet later(n);
    // walking the MCS order forwards = walking the elimination order backwards
    for (auto v : visit) {
        if (! is_clique(g, g.neighbours(v) & later)) {
            result.elimination_order.clear();
            result.hole = find_hole(g).value_or(Cycle{});
            if (result.hole.empty())
                throw InvariantViolation("is_chordal: elimination check failed but no hole found");
            return result;
        }
        later.insert(v);
    }
    result.chordal = true;
    return result;
}

auto is_chordal_bipartite(const Graph & g) -> bool
{
    return is_bipartite(g) && ! has_long_hole(g);
}

auto is_weakly_chordal(const Graph & g) -> bool
{
    return ! has_long_hole(g) && ! has_long_hole(complement(g));
}

auto to_string(Parity p) -> std::string
{
    switch (p) {
        case Parity::acyclic: return "acyclic";
        case Parity::all_even: return "all_even";
        case Parity::all_odd: return "all_odd";
        case Parity::mixed: return "mixed";
    }
    return "?";
}

auto find_even_hole(const Graph & g) -> std::optional<Cycle>
{
    return stop_on(g, 4, std::max(4, g.vertex_count()), [](int len) { return len % 2 == 0; });
}

auto find_odd_hole(const Graph & g) -> std::optional<Cycle>
{
    return stop_on(g, 5, std::max(5, g.vertex_count()), [](int len) { return len % 2 == 1; });
}

auto parity_class(const Graph & g) -> Parity
{
    auto forest = g.edge_count() == g.vertex_count() - static_cast<int>(components(g).size());
    if (forest)
        return Parity::acyclic;
    // a shortest odd cycle is induced, so "no odd induced cycle" is bipartite
    if (is_bipartite(g))
        return Parity::all_even;
    return find_even_hole(g) ? Parity::mixed : Parity::all_odd;
}

auto find_bisimplicial(const Graph & g) -> std::optional<Vertex>
{
    auto all = g.vertices();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (bisimplicial_within(g, v, all))
            return v;
    return std::nullopt;
}

auto bisimplicial_elimination_coloring(const Graph & g) -> Coloring
{
    auto remaining = g.vertices();
    std::vector<Vertex> removal;
    while (! remaining.empty()) {
        Vertex pick = -1;
        for (auto v : remaining)
            if (bisimplicial_within(g, v, remaining)) {
                pick = v;
                break;
            }
        if (pick == -1)
            throw NoBisimplicialVertex(induced(g, remaining), remaining.to_vector());
        removal.push_back(pick);
        remaining.erase(pick);
    }
    std::reverse(removal.begin(), removal.end());
    return greedy_coloring(g, removal);
}

auto imperfect_through(const Graph & g, Vertex v) -> bool
{
    auto odd_through = [v](const Graph & h) {
        if (h.vertex_count() < 5)
            return false;
        std::function<bool(std::span<const Vertex>)> odd = [](std::span<const Vertex> c) { return c.size() % 2 == 1; };
        auto allowed = h.vertices();
        allowed.erase(v);
        CycleDfs dfs{h, 5, h.vertex_count(), false, odd, {}};
        return dfs.run_from(v, allowed);
    };
    return odd_through(g) || odd_through(complement(g));
}

auto is_perfect(const Graph & g, int vertex_cap) -> PerfectResult
{
    if (g.vertex_count() > vertex_cap)
        throw CapExceeded("is_perfect: n = " + std::to_string(g.vertex_count()) + " exceeds cap " + std::to_string(vertex_cap));
    PerfectResult r;
    if (auto hole = find_odd_hole(g)) {
        r.perfect = false;
        r.witness = *hole;
        return r;
    }
    if (auto anti = find_odd_hole(complement(g))) {
        r.perfect = false;
        r.witness = *anti;
        r.witness_is_antihole = true;
    }
    return r;
}

auto classify(const Graph & g, int vertex_cap) -> ClassFlags
{
    ClassFlags f;
    auto chordal = is_chordal(g);
    f.chordal = chordal.chordal;
    f.chordal_witness = chordal.hole;

    auto long_hole = has_long_hole(g);
    f.long_hole_free = ! long_hole;
    if (long_hole)
        f.long_hole_witness = *long_hole;
    auto co_long_hole = has_long_hole(complement(g));
    if (co_long_hole)
        f.complement_long_hole_witness = *co_long_hole;
    f.weakly_chordal = f.long_hole_free && ! co_long_hole;
    f.chordal_bipartite = f.long_hole_free && is_bipartite(g);

    f.parity = parity_class(g);
    f.same_parity = f.parity != Parity::mixed;
    auto even = find_even_hole(g);
    f.even_hole_free = ! even;
    if (even)
        f.even_hole_witness = *even;
    auto odd = find_odd_hole(g);
    f.odd_hole_free = ! odd;
    if (odd)
        f.odd_hole_witness = *odd;

    auto perfect = is_perfect(g, vertex_cap);
    f.perfect = perfect.perfect;
    f.perfect_witness = perfect.witness;
    f.perfect_witness_is_antihole = perfect.witness_is_antihole;
    return f;
}

} // namespace holeforge
