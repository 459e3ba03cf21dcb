#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>

namespace holeforge {

namespace {
    void require(bool ok, const char * what)
    {
        if (! ok)
            throw InputError(what);
    }
}

auto cycle(int n) -> Graph
{
    require(n >= 3, "cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

auto path(int n) -> Graph
{
    require(n >= 1, "path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

auto complete(int n) -> Graph
{
    require(n >= 0, "complete: need n >= 0");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

auto edgeless(int n) -> Graph
{
    require(n >= 0, "edgeless: need n >= 0");
    return Graph(n);
}

auto complete_bipartite(int a, int b) -> Graph
{
    require(a >= 0 && b >= 0, "complete_bipartite: need a, b >= 0");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

auto antihole(int n) -> Graph
{
    return complement(cycle(n));
}

auto line_graph(const Graph & g) -> Graph
{
    auto edges = g.edges();
    auto m = static_cast<int>(edges.size());
    Graph l(m);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = edges[e];
            auto [c, d] = edges[f];
            if (a == c || a == d || b == c || b == d)
                l.add_edge(e, f);
        }
    return l;
}

auto mycielskian(const Graph & g) -> Graph
{
    auto n = g.vertex_count();
    Graph m(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        m.add_edge(u, v);
        m.add_edge(n + u, v);
        m.add_edge(u, n + v);
    }
    for (int i = 0; i < n; ++i)
        m.add_edge(n + i, 2 * n);
    return m;
}

auto grotzsch() -> Graph
{
    return mycielskian(cycle(5));
}

auto tree_T(int k) -> Graph
{
    require(k >= 1, "tree_T: need k >= 1");
    Graph t(k + 5);
    for (int i = 0; i < k; ++i)
        t.add_edge(i, i + 1);
    t.add_edge(0, k + 1);
    t.add_edge(0, k + 2);
    t.add_edge(k, k + 3);
    t.add_edge(k, k + 4);
    return t;
}

auto scott_seymour(int k) -> Graph
{
    require(k >= 0, "scott_seymour: need k >= 0");
    require(k <= 4, "scott_seymour: k > 4 is beyond desk scale");
    auto g = complete(1);
    auto part = antihole(7);
    for (int i = 0; i < k; ++i) {
        std::vector<Graph> parts(static_cast<std::size_t>(g.vertex_count()), part);
        g = substitute(g, parts);
    }
    return g;
}

} // namespace holeforge
