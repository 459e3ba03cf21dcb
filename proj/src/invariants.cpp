#include <holeforge/errors.hpp>
#include <holeforge/invariants.hpp>

#include <algorithm>
#include <numeric>

namespace holeforge {

auto Coloring::colors_used() const -> int
{
    std::vector<int> seen = color;
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

auto compacted(Coloring c) -> Coloring
{
    std::vector<int> from;
    for (auto & x : c.color) {
        auto it = std::find(from.begin(), from.end(), x);
        if (it == from.end()) {
            from.push_back(x);
            x = static_cast<int>(from.size()) - 1;
        }
        else
            x = static_cast<int>(it - from.begin());
    }
    c.palette = static_cast<int>(from.size());
    return c;
}

auto is_proper(const Graph & g, const Coloring & c) -> bool
{
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        return false;
    for (auto x : c.color)
        if (x < 0 || x >= c.palette)
            return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

auto greedy_coloring(const Graph & g, std::span<const Vertex> order) -> Coloring
{
    auto n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw InputError("greedy_coloring: order is not a permutation");
    VertexSet seen(n);
    for (auto v : order) {
        if (v < 0 || v >= n || seen.contains(v))
            throw InputError("greedy_coloring: order is not a permutation");
        seen.insert(v);
    }

    Coloring c{std::vector<int>(n, -1), 0};
    std::vector<char> taken;
    for (auto v : order) {
        taken.assign(static_cast<std::size_t>(c.palette) + 1, 0);
        for (auto w : g.neighbours(v))
            if (c.color[w] >= 0)
                taken[c.color[w]] = 1;
        int x = 0;
        while (taken[x])
            ++x;
        c.color[v] = x;
        c.palette = std::max(c.palette, x + 1);
    }
    return c;
}

Deadline::Deadline(double seconds)
{
    if (seconds > 0)
        at_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

auto Deadline::expired() const -> bool
{
    return at_ && std::chrono::steady_clock::now() >= *at_;
}

namespace {
    // Colour-class bound ordering for clique search: vertices of p listed by
    // greedy colour class, bounds[i] = number of classes up to order[i].
    void colour_sort(const Graph & g, const VertexSet & p, std::vector<Vertex> & order, std::vector<int> & bounds)
    {
        order.clear();
        bounds.clear();
        auto uncoloured = p;
        int colour = 0;
        while (! uncoloured.empty()) {
            ++colour;
            auto q = uncoloured;
            while (! q.empty()) {
                auto v = q.first();
                q.erase(v);
                q -= g.neighbours(v);
                uncoloured.erase(v);
                order.push_back(v);
                bounds.push_back(colour);
            }
        }
    }

    struct CliqueSearch
    {
        const Graph & g;
        std::vector<Vertex> current {}, best {};
        // when collecting, keep every clique of size >= target
        bool collect = false;
        int target = 0;
        std::vector<std::vector<Vertex>> found {};

        void expand(VertexSet p)
        {
            std::vector<Vertex> order;
            std::vector<int> bounds;
            colour_sort(g, p, order, bounds);
            for (auto i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                auto bound = static_cast<int>(current.size()) + bounds[i];
                if (collect ? bound < target : bound <= static_cast<int>(best.size()))
                    return;
                auto v = order[i];
                current.push_back(v);
                auto next = p & g.neighbours(v);
                if (next.empty()) {
                    if (collect) {
                        if (static_cast<int>(current.size()) == target)
                            found.push_back(current);
                    }
                    else if (current.size() > best.size())
                        best = current;
                }
                else
                    expand(next);
                current.pop_back();
                p.erase(v);
            }
        }
    };

    struct ColourSearch
    {
        const Graph & g;
        int n, k;
        const Deadline & deadline;
        std::vector<int> colour;
        std::vector<int> conflicts;
        std::vector<int> saturation;
        long long nodes = 0;
        bool timed_out = false;

        ColourSearch(const Graph & graph, int colours, const Deadline & d) :
            g(graph), n(graph.vertex_count()), k(colours), deadline(d), colour(graph.vertex_count(), -1),
            conflicts(static_cast<std::size_t>(graph.vertex_count()) * static_cast<std::size_t>(colours), 0), saturation(graph.vertex_count(), 0)
        {
        }

        void assign(Vertex v, int c)
        {
            colour[v] = c;
            for (auto w : g.neighbours(v))
                if (conflicts[static_cast<std::size_t>(w) * k + c]++ == 0)
                    ++saturation[w];
        }

        void unassign(Vertex v)
        {
            auto c = colour[v];
            colour[v] = -1;
            for (auto w : g.neighbours(v))
                if (--conflicts[static_cast<std::size_t>(w) * k + c] == 0)
                    --saturation[w];
        }

        auto select() const -> Vertex
        {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (colour[v] != -1)
                    continue;
                if (best == -1 || saturation[v] > saturation[best] || (saturation[v] == saturation[best] && g.degree(v) > g.degree(best)))
                    best = v;
            }
            return best;
        }

        auto solve(int remaining, int max_used) -> bool
        {
            if (remaining == 0)
                return true;
            if ((++nodes & 1023) == 0 && deadline.expired()) {
                timed_out = true;
                return false;
            }
            auto v = select();
            auto limit = std::min(k - 1, max_used + 1);
            for (int c = 0; c <= limit; ++c) {
                if (conflicts[static_cast<std::size_t>(v) * k + c])
                    continue;
                assign(v, c);
                if (solve(remaining - 1, std::max(max_used, c)))
                    return true;
                unassign(v);
                if (timed_out)
                    return false;
            }
            return false;
        }
    };
}

auto dsatur_coloring(const Graph & g) -> Coloring
{
    auto n = g.vertex_count();
    Deadline none;
    ColourSearch s(g, std::max(n, 1), none);
    for (int placed = 0; placed < n; ++placed) {
        auto v = s.select();
        int c = 0;
        while (s.conflicts[static_cast<std::size_t>(v) * s.k + c])
            ++c;
        s.assign(v, c);
    }
    Coloring out{s.colour, 0};
    for (auto c : out.color)
        out.palette = std::max(out.palette, c + 1);
    return out;
}

auto clique_number(const Graph & g, const VertexSet & within) -> CliqueResult
{
    CliqueSearch s{g};
    if (! within.empty())
        s.expand(within);
    std::sort(s.best.begin(), s.best.end());
    return {static_cast<int>(s.best.size()), s.best};
}

auto clique_number(const Graph & g) -> CliqueResult
{
    return clique_number(g, g.vertices());
}

auto stability_number(const Graph & g) -> CliqueResult
{
    return clique_number(complement(g));
}

auto maximum_cliques(const Graph & g) -> std::vector<std::vector<Vertex>>
{
    auto omega = clique_number(g).size;
    if (omega == 0)
        return {{}};
    CliqueSearch s{g};
    s.collect = true;
    s.target = omega;
    s.expand(g.vertices());
    for (auto & c : s.found)
        std::sort(c.begin(), c.end());
    std::sort(s.found.begin(), s.found.end());
    return s.found;
}

auto k_colorable(const Graph & g, int k, std::span<const Vertex> seed, const Deadline & deadline, Coloring * out) -> Colorability
{
    auto n = g.vertex_count();
    if (n == 0) {
        if (out)
            *out = Coloring{};
        return Colorability::colorable;
    }
    if (k <= 0 || static_cast<int>(seed.size()) > k)
        return Colorability::not_colorable;
    ColourSearch s(g, k, deadline);
    int c = 0;
    for (auto v : seed)
        s.assign(v, c++);
    auto ok = s.solve(n - static_cast<int>(seed.size()), static_cast<int>(seed.size()) - 1);
    if (s.timed_out)
        return Colorability::timeout;
    if (! ok)
        return Colorability::not_colorable;
    if (out)
        *out = Coloring{s.colour, k};
    return Colorability::colorable;
}

auto chromatic_number(const Graph & g, const SolverOptions & options) -> ChromaticResult
{
    auto n = g.vertex_count();
    if (n > options.vertex_cap)
        throw CapExceeded("chromatic_number: n = " + std::to_string(n) + " exceeds cap " + std::to_string(options.vertex_cap));
    if (n == 0)
        return {};

    Deadline deadline(options.timeout_seconds);
    auto clique = clique_number(g);
    auto alpha = stability_number(g).size;
    auto lower = std::max(clique.size, (n + alpha - 1) / alpha);

    ChromaticResult result;
    result.witness = compacted(dsatur_coloring(g));
    result.upper = result.witness.palette;
    result.lower = lower;
    for (int k = lower; k < result.upper; ++k) {
        Coloring found;
        auto verdict = k_colorable(g, k, clique.witness, deadline, &found);
        if (verdict == Colorability::colorable) {
            result.witness = compacted(std::move(found));
            result.upper = result.lower = k;
            return result;
        }
        if (verdict == Colorability::timeout) {
            result.status = SolveStatus::timeout;
            result.lower = k;
            return result;
        }
    }
    result.lower = result.upper;
    return result;
}

auto clique_cover_number(const Graph & g, const SolverOptions & options) -> ChromaticResult
{
    return chromatic_number(complement(g), options);
}

auto analyze(const Graph & g, const SolverOptions & options) -> InvariantReport
{
    InvariantReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    auto clique = clique_number(g);
    r.omega = clique.size;
    r.max_clique = clique.witness;
    auto stable = stability_number(g);
    r.alpha = stable.size;
    r.max_stable = stable.witness;
    r.chi = chromatic_number(g, options);
    r.theta = clique_cover_number(g, options);
    return r;
}

} // namespace holeforge
