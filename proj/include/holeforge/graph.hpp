#pragma once

#include <holeforge/vertex_set.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holeforge {

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric bit matrix; loops are rejected. Mutation is only
/// meant for building a graph; every algorithm treats graphs as values.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    static auto from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph;
    static auto from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph;

    auto vertex_count() const -> int { return n_; }
    auto edge_count() const -> int;

    auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].contains(v); }
    auto neighbours(Vertex v) const -> const VertexSet & { return rows_[v]; }
    auto degree(Vertex v) const -> int { return rows_[v].size(); }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    auto vertices() const -> VertexSet { return VertexSet::full(n_); }
    auto empty_set() const -> VertexSet { return VertexSet(n_); }
    auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

    auto max_degree() const -> int;
    auto min_degree() const -> int;

    auto operator==(const Graph & other) const -> bool = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// Injective map from pattern vertices to host vertices; image[i] is the host
/// vertex for pattern vertex i.
struct Embedding
{
    std::vector<Vertex> image;
    auto operator==(const Embedding &) const -> bool = default;
};

/// True when every pair of pattern vertices is adjacent in h iff the images are
/// adjacent in g, and the map is injective.
auto is_induced_embedding(const Graph & h, const Graph & g, const Embedding & e) -> bool;

auto complement(const Graph & g) -> Graph;

/// Subgraph induced on s, relabelled by rank (smallest member becomes 0).
auto induced(const Graph & g, const VertexSet & s) -> Graph;
auto induced(const Graph & g, std::span<const Vertex> ordered) -> Graph;

/// Replace vertex v of g by parts[v]; parts of adjacent vertices are completely
/// joined, parts of non-adjacent vertices are anticomplete. Vertices of part v
/// are numbered consecutively after those of parts 0..v-1.
auto substitute(const Graph & g, std::span<const Graph> parts) -> Graph;

auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

/// Copy of g with vertex v renamed to perm[v].
auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph;

auto is_connected(const Graph & g) -> bool;
auto is_bipartite(const Graph & g) -> bool;
auto is_clique(const Graph & g, const VertexSet & s) -> bool;
auto is_stable(const Graph & g, const VertexSet & s) -> bool;

/// Connected components of g[within], ordered by smallest member.
auto components(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>;
auto components(const Graph & g) -> std::vector<VertexSet>;

/// Shortest path from a to b whose interior lies in `allowed` (endpoints need
/// not be in it). Empty when none exists.
auto shortest_path(const Graph & g, Vertex a, Vertex b, const VertexSet & allowed) -> std::vector<Vertex>;

/// Edge-list text: first token n, then "u v" pairs.
auto parse_edge_list(const std::string & text) -> Graph;
auto write_edge_list(const Graph & g) -> std::string;

} // namespace holeforge
