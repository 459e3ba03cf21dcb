#include <holeforge/errors.hpp>
#include <holeforge/graph.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace holeforge {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw InputError("negative vertex count");
    rows_.assign(n, VertexSet(n));
}

auto Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto Graph::from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph
{
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto & r : rows_)
        twice += r.size();
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw InputError("self-loop on vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    rows_[u].erase(v);
    rows_[v].erase(u);
}

auto Graph::edges() const -> std::vector<std::pair<Vertex, Vertex>>
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (auto v = neighbours(u).next(u); v != -1; v = neighbours(u).next(v))
            out.emplace_back(u, v);
    return out;
}

auto Graph::max_degree() const -> int
{
    int d = 0;
    for (Vertex v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

auto Graph::min_degree() const -> int
{
    if (n_ == 0)
        return 0;
    int d = n_;
    for (Vertex v = 0; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

auto is_induced_embedding(const Graph & h, const Graph & g, const Embedding & e) -> bool
{
    auto k = h.vertex_count();
    if (static_cast<int>(e.image.size()) != k)
        return false;
    VertexSet used(g.vertex_count());
    for (auto v : e.image) {
        if (v < 0 || v >= g.vertex_count() || used.contains(v))
            return false;
        used.insert(v);
    }
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b)
            if (h.adjacent(a, b) != g.adjacent(e.image[a], e.image[b]))
                return false;
    return true;
}

auto complement(const Graph & g) -> Graph
{
    auto n = g.vertex_count();
    Graph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (! g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

auto induced(const Graph & g, std::span<const Vertex> ordered) -> Graph
{
    auto k = static_cast<int>(ordered.size());
    Graph h(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(ordered[a], ordered[b]))
                h.add_edge(a, b);
    return h;
}

auto induced(const Graph & g, const VertexSet & s) -> Graph
{
    auto members = s.to_vector();
    return induced(g, std::span<const Vertex>(members));
}

auto substitute(const Graph & g, std::span<const Graph> parts) -> Graph
{
    auto n = g.vertex_count();
    if (static_cast<int>(parts.size()) != n)
        throw InputError("substitute: need one part per base vertex");

    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + parts[v].vertex_count();

    Graph out(offset.back());
    for (int v = 0; v < n; ++v) {
        auto base = offset[v];
        for (auto [a, b] : parts[v].edges())
            out.add_edge(base + a, base + b);
    }
    for (auto [u, v] : g.edges())
        for (int a = offset[u]; a < offset[u + 1]; ++a)
            for (int b = offset[v]; b < offset[v + 1]; ++b)
                out.add_edge(a, b);
    return out;
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto na = a.vertex_count();
    Graph out(na + b.vertex_count());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(na + u, na + v);
    return out;
}

auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph
{
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

auto components(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    auto left = within;
    while (! left.empty()) {
        VertexSet comp(g.vertex_count());
        auto frontier = VertexSet::of(g.vertex_count(), {left.first()});
        while (! frontier.empty()) {
            comp |= frontier;
            VertexSet grown(g.vertex_count());
            for (auto v : frontier)
                grown |= g.neighbours(v);
            grown &= left;
            grown -= comp;
            frontier = grown;
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

auto components(const Graph & g) -> std::vector<VertexSet>
{
    return components(g, g.vertices());
}

auto is_connected(const Graph & g) -> bool
{
    return components(g).size() <= 1;
}

auto is_bipartite(const Graph & g) -> bool
{
    auto n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
                else if (side[w] == side[u])
                    return false;
            }
        }
    }
    return true;
}

auto is_clique(const Graph & g, const VertexSet & s) -> bool
{
    for (auto v : s)
        if (! (s - g.neighbours(v)).is_subset_of(VertexSet::of(g.vertex_count(), {v})))
            return false;
    return true;
}

auto is_stable(const Graph & g, const VertexSet & s) -> bool
{
    for (auto v : s)
        if (g.neighbours(v).intersects(s))
            return false;
    return true;
}

auto shortest_path(const Graph & g, Vertex a, Vertex b, const VertexSet & allowed) -> std::vector<Vertex>
{
    auto n = g.vertex_count();
    std::vector<Vertex> parent(n, -1);
    parent[a] = a;
    std::deque<Vertex> queue{a};
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbours(u)) {
            if (parent[w] != -1)
                continue;
            if (w == b) {
                parent[w] = u;
                std::vector<Vertex> path{b};
                for (auto x = u; x != a; x = parent[x])
                    path.push_back(x);
                path.push_back(a);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (! allowed.contains(w))
                continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    return {};
}

auto parse_edge_list(const std::string & text) -> Graph
{
    std::istringstream in(text);
    long n;
    if (! (in >> n) || n < 0)
        throw InputError("edge list: missing or invalid vertex count");
    Graph g(static_cast<int>(n));
    long u, v;
    while (in >> u) {
        if (! (in >> v))
            throw InputError("edge list: dangling endpoint " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge list: endpoint out of range in edge " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw InputError("edge list: self-loop on " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (! in.eof())
        throw InputError("edge list: non-numeric token");
    return g;
}

auto write_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace holeforge
