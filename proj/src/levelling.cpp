#include <holeforge/errors.hpp>
#include <holeforge/levelling.hpp>

#include <algorithm>

namespace holeforge {

auto Levelling::level_of(Vertex v) const -> int
{
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i].contains(v))
            return static_cast<int>(i);
    return -1;
}

auto build_levelling(const Graph & g, Vertex root, const VertexSet & within) -> Levelling
{
    Levelling l;
    l.root = root;
    auto seen = VertexSet::of(g.vertex_count(), {root});
    auto frontier = seen;
    while (! frontier.empty()) {
        l.levels.push_back(frontier);
        VertexSet next(g.vertex_count());
        for (auto v : frontier)
            next |= g.neighbours(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return l;
}

auto build_levelling(const Graph & g, Vertex root) -> Levelling
{
    if (root < 0 || root >= g.vertex_count())
        throw InputError("build_levelling: root out of range");
    auto l = build_levelling(g, root, g.vertices());
    int covered = 0;
    for (auto & level : l.levels)
        covered += level.size();
    if (covered != g.vertex_count())
        throw InputError("build_levelling: graph is disconnected");
    return l;
}

auto prune_for_component(const Graph & g, const Levelling & l, int k, const VertexSet & c) -> PrunedLevelling
{
    auto n = g.vertex_count();
    if (k < 1 || k >= static_cast<int>(l.levels.size()))
        throw InputError("prune_for_component: level out of range");

    PrunedLevelling p;
    p.k = k;
    p.remaining.assign(l.levels.begin(), l.levels.begin() + k);
    p.remaining.push_back(c);

    std::vector<int> level(n, -1);
    for (int i = 0; i <= k; ++i)
        for (auto v : p.remaining[i])
            level[v] = i;

    // parents[w]: surviving neighbours one level up; exclusive[v]: children
    // whose only surviving parent is v
    std::vector<int> parents(n, 0), exclusive(n, 0);
    auto parent_set = [&](Vertex w) { return g.neighbours(w) & p.remaining[level[w] - 1]; };
    for (int i = 1; i <= k; ++i)
        for (auto w : p.remaining[i]) {
            auto up = parent_set(w);
            parents[w] = up.size();
            if (parents[w] == 1)
                ++exclusive[up.first()];
        }

    VertexSet deletable(n);
    for (int i = 0; i < k; ++i)
        for (auto v : p.remaining[i])
            if (exclusive[v] == 0)
                deletable.insert(v);

    while (! deletable.empty()) {
        auto v = deletable.first();
        deletable.erase(v);
        auto i = level[v];
        p.remaining[i].erase(v);
        p.pruned.push_back(v);

        for (auto w : g.neighbours(v) & p.remaining[i + 1])
            if (--parents[w] == 1) {
                auto only = parent_set(w).first();
                if (exclusive[only]++ == 0)
                    deletable.erase(only);
            }
        if (i > 0 && parents[v] == 1) {
            auto only = parent_set(v).first();
            if (--exclusive[only] == 0)
                deletable.insert(only);
        }
        level[v] = -1;
    }
    return p;
}

auto pruned_invariants_hold(const Graph & g, const PrunedLevelling & p) -> bool
{
    for (int i = 0; i < p.k; ++i)
        for (auto v : p.remaining[i]) {
            bool has_exclusive = false;
            for (auto w : g.neighbours(v) & p.remaining[i + 1])
                if ((g.neighbours(w) & p.remaining[i]).size() == 1)
                    has_exclusive = true;
            if (! has_exclusive)
                return false;
        }
    for (int i = 1; i <= p.k; ++i)
        for (auto w : p.remaining[i])
            if (! g.neighbours(w).intersects(p.remaining[i - 1]))
                return false;
    return true;
}

auto palette_bound(int omega) -> PaletteBound
{
    if (omega < 1)
        throw InputError("palette_bound: omega must be >= 1");
    PaletteBound b{1, false};
    for (int w = 2; w <= omega; ++w) {
        if (b.value > (std::uint64_t{1} << 31))
            return {0, true};
        b.value = 4 * b.value * b.value;
    }
    return b;
}

namespace {
    class LevellingColorer
    {
    public:
        LevellingColorer(const Graph & graph) : g_(graph) {}

        PaletteAudit audit;

        // Colours g[s] with 0..r-1 written into out; returns r.
        auto color_set(const VertexSet & s, std::vector<int> & out) -> int
        {
            int used = 0;
            for (auto & comp : components(g_, s))
                used = std::max(used, color_component(comp, out));
            return used;
        }

    private:
        const Graph & g_;

        [[noreturn]] void long_hole(const std::string & why)
        {
            auto hole = has_long_hole(g_);
            if (! hole)
                throw InvariantViolation("levelling colouring: " + why + ", yet no long hole exists");
            throw LongHoleDetected(*hole, "levelling colouring: " + why);
        }

        // Colour a set whose clique number must be below `omega`.
        auto color_below(const VertexSet & s, int omega, std::vector<int> & out, const char * what) -> int
        {
            if (s.empty())
                return 0;
            if (clique_number(g_, s).size >= omega)
                long_hole(std::string(what) + " has clique number >= " + std::to_string(omega));
            return color_set(s, out);
        }

        auto color_component(const VertexSet & comp, std::vector<int> & out) -> int
        {
            auto omega = clique_number(g_, comp).size;
            if (omega <= 1) {
                for (auto v : comp)
                    out[v] = 0;
                return 1;
            }

            auto levelling = build_levelling(g_, comp.first(), comp);
            auto depth = static_cast<int>(levelling.levels.size());
            std::vector<int> level_used(depth, 0);

            out[levelling.root] = 0;
            level_used[0] = 1;
            if (depth > 1)
                level_used[1] = color_below(levelling.levels[1], omega, out, "level 1");
            for (int k = 2; k < depth; ++k)
                for (auto & top : components(g_, levelling.levels[k]))
                    level_used[k] = std::max(level_used[k], color_top(levelling, k, top, omega, out));

            int even = 0, odd = 0;
            for (int k = 0; k < depth; ++k)
                (k % 2 == 0 ? even : odd) = std::max(k % 2 == 0 ? even : odd, level_used[k]);
            for (int k = 1; k < depth; k += 2)
                for (auto v : levelling.levels[k])
                    out[v] += even;

            auto inner = palette_bound(omega - 1);
            for (int k = 0; k < depth; ++k) {
                ++audit.levels_checked;
                audit.widest_level = std::max(audit.widest_level, level_used[k]);
                if (! inner.saturated && inner.value <= (std::uint64_t{1} << 31)
                        && static_cast<std::uint64_t>(level_used[k]) > 2 * inner.value * inner.value)
                    ++audit.level_budget_violations;
            }
            if (! palette_bound(omega).admits(even + odd))
                ++audit.component_budget_violations;
            return even + odd;
        }

        // Colour one component `top` of level k >= 2.
        auto color_top(const Levelling & levelling, int k, const VertexSet & top, int omega, std::vector<int> & out) -> int
        {
            auto pruned = prune_for_component(g_, levelling, k, top);
            auto & grand = pruned.remaining[k - 2];
            auto & parents = pruned.remaining[k - 1];
            if (grand.empty())
                throw InvariantViolation("levelling colouring: pruning emptied level " + std::to_string(k - 2));

            auto x = grand.first();
            Vertex y = -1;
            for (auto w : g_.neighbours(x) & parents)
                if ((g_.neighbours(w) & grand).size() == 1) {
                    y = w;
                    break;
                }
            if (y == -1)
                throw InvariantViolation("levelling colouring: pruned vertex has no exclusive child");

            auto a = g_.neighbours(y) & parents;
            auto b = parents - a;
            b.erase(y);
            if (! b.is_subset_of(g_.neighbours(x)))
                long_hole("a non-neighbour of y on level " + std::to_string(k - 1) + " misses x");
            auto by = b;
            by.insert(y);

            std::vector<int> aux(g_.vertex_count(), -1);
            auto used_a = color_below(a, omega, aux, "neighbourhood of y");
            auto used_b = color_below(by, omega, aux, "B + y");
            for (auto v : by)
                aux[v] += used_a;

            std::vector<VertexSet> groups(used_a + used_b, VertexSet(g_.vertex_count()));
            for (auto u : top) {
                int smallest = -1;
                for (auto w : g_.neighbours(u) & parents)
                    if (smallest == -1 || aux[w] < smallest)
                        smallest = aux[w];
                if (smallest == -1)
                    throw InvariantViolation("levelling colouring: top vertex lost all parents");
                groups[smallest].insert(u);
            }

            int total = 0;
            for (auto & group : groups) {
                if (group.empty())
                    continue;
                auto used = color_below(group, omega, out, "minimum-colour class");
                for (auto v : group)
                    out[v] += total;
                total += used;
            }
            return total;
        }
    };
}

auto color_long_hole_free_audited(const Graph & g, bool trust) -> LevellingColoring
{
    if (! trust)
        if (auto hole = has_long_hole(g))
            throw LongHoleDetected(*hole, "input has a hole of length " + std::to_string(hole->size()));

    LevellingColorer colorer(g);
    std::vector<int> color(g.vertex_count(), -1);
    auto used = colorer.color_set(g.vertices(), color);
    LevellingColoring result{Coloring{std::move(color), used}, colorer.audit};
    if (! is_proper(g, result.coloring))
        throw InvariantViolation("levelling colouring produced an improper colouring");
    return result;
}

auto color_long_hole_free(const Graph & g, bool trust) -> Coloring
{
    return color_long_hole_free_audited(g, trust).coloring;
}

auto coloring_report(const Graph & g, bool exact, const SolverOptions & options, bool trust) -> ColoringReport
{
    ColoringReport r;
    auto coloring = color_long_hole_free(g, trust);
    r.colors_used = coloring.colors_used();
    r.omega = clique_number(g).size;
    r.bound = palette_bound(std::max(r.omega, 1));
    if (exact) {
        auto chi = chromatic_number(g, options);
        if (chi.exact())
            r.chi_exact = chi.value();
    }
    return r;
}

} // namespace holeforge
