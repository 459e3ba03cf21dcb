#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>
#include <holeforge/holes.hpp>
#include <holeforge/perfection.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>

namespace holeforge {

auto is_valid_perfect_partition(const Graph & g, const PerfectPartition & p) -> bool
{
    auto seen = g.empty_set();
    for (auto & c : p.classes) {
        if (c.empty() || c.intersects(seen))
            return false;
        seen |= c;
        if (! is_perfect(induced(g, c), g.vertex_count()).perfect)
            return false;
    }
    return seen == g.vertices();
}

namespace {
    auto ceil_div(int a, int b) -> int { return (a + b - 1) / b; }

    // Union of colour classes 2i and 2i+1 is bipartite, hence perfect.
    auto paired_classes(const Graph & g, const Coloring & c) -> PerfectPartition
    {
        PerfectPartition p;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto slot = static_cast<std::size_t>(c.color[v] / 2);
            while (p.classes.size() <= slot)
                p.classes.push_back(g.empty_set());
            p.classes[slot].insert(v);
        }
        std::erase_if(p.classes, [](const VertexSet & s) { return s.empty(); });
        return p;
    }

    struct PartitionSearch
    {
        const Graph & g;
        int t;
        Deadline deadline;
        std::vector<Vertex> order;
        std::vector<std::vector<Vertex>> classes;
        long long nodes = 0;
        bool timed_out = false;

        auto fits(int j, Vertex v) -> bool
        {
            auto & members = classes[j];
            if (members.size() < 4)
                return true;
            members.push_back(v);
            auto h = induced(g, std::span<const Vertex>(members));
            members.pop_back();
            return ! imperfect_through(h, h.vertex_count() - 1);
        }

        auto solve(std::size_t i, int opened) -> bool
        {
            if (i == order.size())
                return true;
            if ((++nodes & 255) == 0 && deadline.expired()) {
                timed_out = true;
                return false;
            }
            auto v = order[i];
            auto limit = std::min(t - 1, opened);
            for (int j = 0; j <= limit; ++j) {
                if (! fits(j, v))
                    continue;
                classes[j].push_back(v);
                if (solve(i + 1, std::max(opened, j + 1)))
                    return true;
                classes[j].pop_back();
                if (timed_out)
                    return false;
            }
            return false;
        }
    };
}

auto chi_p_bounds(const Graph & g, const SolverOptions & options) -> ChiPBounds
{
    if (g.vertex_count() == 0)
        throw InputError("chi_p_bounds: empty graph");
    auto chi = chromatic_number(g, options);
    auto omega = clique_number(g).size;
    return {ceil_div(chi.lower, omega), ceil_div(chi.upper, 2)};
}

auto perfect_chromatic_number(const Graph & g, const ChiPOptions & options) -> ChiPResult
{
    auto n = g.vertex_count();
    if (n > options.vertex_cap)
        throw CapExceeded("perfect_chromatic_number: n = " + std::to_string(n) + " exceeds cap " + std::to_string(options.vertex_cap));

    ChiPResult r;
    if (n == 0)
        return r;

    Deadline deadline(options.timeout_seconds);
    if (is_perfect(g, n).perfect) {
        r.value = r.lower = r.upper = 1;
        r.partition.classes.push_back(g.vertices());
        return r;
    }

    auto chi = chromatic_number(g, {n, options.timeout_seconds});
    auto omega = clique_number(g).size;
    r.lower = std::max(2, ceil_div(chi.lower, omega));
    r.upper = ceil_div(chi.upper, 2);
    r.partition = paired_classes(g, chi.witness);

    PartitionSearch s{g, 0, deadline, g.vertices().to_vector(), {}};
    std::stable_sort(s.order.begin(), s.order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    for (int t = r.lower; t < r.upper; ++t) {
        s.t = t;
        s.classes.assign(t, {});
        if (s.solve(0, 0)) {
            r.upper = t;
            r.partition.classes.clear();
            for (auto & members : s.classes)
                if (! members.empty())
                    r.partition.classes.push_back(VertexSet::from_range(n, members));
            break;
        }
        if (s.timed_out) {
            r.status = SolveStatus::timeout;
            r.value = r.upper;
            return r;
        }
        r.lower = t + 1;
    }
    r.value = r.lower = r.upper;
    return r;
}

auto chi_p_triangle_free(const Graph & g, const SolverOptions & options) -> int
{
    if (clique_number(g).size > 2)
        throw InputError("chi_p_triangle_free: graph has a triangle");
    auto chi = chromatic_number(g, options);
    if (! chi.exact())
        throw CapExceeded("chi_p_triangle_free: chromatic number timed out");
    return ceil_div(chi.value(), 2);
}

auto is_nice(const Graph & g, const NiceOptions & options) -> NiceReport
{
    auto n = g.vertex_count();
    if (n > options.vertex_cap || n > 30)
        throw CapExceeded("is_nice: n = " + std::to_string(n) + " exceeds cap " + std::to_string(options.vertex_cap));

    Deadline deadline(options.timeout_seconds);
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    auto connected = [&](std::uint32_t s) {
        auto reached = s & (~s + 1);
        for (std::uint32_t frontier = reached; frontier;) {
            std::uint32_t next = 0;
            for (auto f = frontier; f; f &= f - 1)
                next |= adj[std::countr_zero(f)];
            next &= s & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == s;
    };

    NiceReport r;
    std::vector<Vertex> members;
    for (int size = n; size >= 1; --size) {
        // all size-subsets of n bits in increasing numeric order
        for (std::uint64_t s = (std::uint64_t{1} << size) - 1; s < (std::uint64_t{1} << n);) {
            auto mask = static_cast<std::uint32_t>(s);
            if (connected(mask)) {
                ++r.subgraphs_checked;
                members.clear();
                for (auto m = mask; m; m &= m - 1)
                    members.push_back(std::countr_zero(m));
                auto h = induced(g, std::span<const Vertex>(members));
                auto clique = clique_number(h);
                if (dsatur_coloring(h).colors_used() > clique.size + 1) {
                    auto verdict = k_colorable(h, clique.size + 1, clique.witness, deadline);
                    if (verdict == Colorability::timeout)
                        throw CapExceeded("is_nice: chromatic number timed out");
                    if (verdict == Colorability::not_colorable) {
                        r.is_nice = false;
                        r.witness = VertexSet::from_range(n, members);
                        return r;
                    }
                }
            }
            auto low = s & (~s + 1);
            auto ripple = s + low;
            s = ripple | (((s ^ ripple) >> 2) / low);
        }
    }
    return r;
}

auto chi_p_of_line_complete(int n, const ChiPOptions & options, int n_cap) -> ChiPResult
{
    if (n < 2)
        throw InputError("chi_p_of_line_complete: need n >= 2");
    if (n > n_cap)
        throw CapExceeded("chi_p_of_line_complete: n = " + std::to_string(n) + " exceeds cap " + std::to_string(n_cap));
    auto opts = options;
    opts.vertex_cap = std::max(opts.vertex_cap, n * (n - 1) / 2);
    return perfect_chromatic_number(line_graph(complete(n)), opts);
}

} // namespace holeforge
