#pragma once

// Brute-force reference implementations, deliberately naive and independent
// of the library's algorithms. Everything works on bitmasks, so n <= 16.

#include <holeforge/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using holeforge::Graph;
using Mask = std::uint32_t;

inline auto adjacency(const Graph & g) -> std::vector<Mask>
{
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

inline auto members(Mask s) -> std::vector<int>
{
    std::vector<int> out;
    for (; s; s &= s - 1)
        out.push_back(std::countr_zero(s));
    return out;
}

inline auto is_clique(const std::vector<Mask> & adj, Mask s) -> bool
{
    for (auto v : members(s))
        if ((s & ~(Mask{1} << v) & ~adj[v]) != 0)
            return false;
    return true;
}

inline auto is_stable(const std::vector<Mask> & adj, Mask s) -> bool
{
    for (auto v : members(s))
        if (s & adj[v])
            return false;
    return true;
}

/// omega of g[s] by scanning every subset.
inline auto omega(const std::vector<Mask> & adj, Mask s) -> int
{
    int best = 0;
    for (Mask t = s;; t = (t - 1) & s) {
        if (std::popcount(t) > best && is_clique(adj, t))
            best = std::popcount(t);
        if (t == 0)
            break;
    }
    return best;
}

inline auto alpha(const std::vector<Mask> & adj, Mask s) -> int
{
    int best = 0;
    for (Mask t = s;; t = (t - 1) & s) {
        if (std::popcount(t) > best && is_stable(adj, t))
            best = std::popcount(t);
        if (t == 0)
            break;
    }
    return best;
}

inline auto k_colorable(const std::vector<Mask> & adj, const std::vector<int> & vs, std::vector<int> & colour, std::size_t i, int k) -> bool
{
    if (i == vs.size())
        return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j)
            if (colour[vs[j]] == c && (adj[vs[i]] >> vs[j] & 1))
                ok = false;
        if (! ok)
            continue;
        colour[vs[i]] = c;
        if (k_colorable(adj, vs, colour, i + 1, k))
            return true;
    }
    return false;
}

/// chi of g[s] by trying k = 0, 1, 2, ... with plain backtracking.
inline auto chi(const std::vector<Mask> & adj, Mask s) -> int
{
    auto vs = members(s);
    std::vector<int> colour(adj.size(), -1);
    for (int k = 0;; ++k)
        if (k_colorable(adj, vs, colour, 0, k))
            return k;
}

/// g[s] is a cycle: connected, 2-regular, at least 3 vertices.
inline auto induces_cycle(const std::vector<Mask> & adj, Mask s) -> bool
{
    if (std::popcount(s) < 3)
        return false;
    for (auto v : members(s))
        if (std::popcount(adj[v] & s) != 2)
            return false;
    Mask reached = s & (~s + 1);
    for (Mask frontier = reached; frontier;) {
        Mask next = 0;
        for (auto v : members(frontier))
            next |= adj[v] & s;
        next &= ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == s;
}

/// Vertex sets of all induced cycles with length in [lo, hi].
inline auto induced_cycle_sets(const Graph & g, int lo, int hi) -> std::vector<Mask>
{
    auto adj = adjacency(g);
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s) {
        auto k = std::popcount(s);
        if (k >= lo && k <= hi && induces_cycle(adj, s))
            out.push_back(s);
    }
    return out;
}

inline auto has_cycle_length(const Graph & g, int lo, bool odd_only, bool even_only) -> bool
{
    for (auto s : induced_cycle_sets(g, lo, g.vertex_count())) {
        auto k = std::popcount(s);
        if ((odd_only && k % 2 == 0) || (even_only && k % 2 == 1))
            continue;
        return true;
    }
    return false;
}

/// chi(H) = omega(H) for every induced H.
inline auto perfect(const Graph & g) -> bool
{
    auto adj = adjacency(g);
    for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s)
        if (chi(adj, s) != omega(adj, s))
            return false;
    return true;
}

inline auto perfect_on(const std::vector<Mask> & adj, Mask s) -> bool
{
    for (Mask t = s;; t = (t - 1) & s) {
        if (chi(adj, t) != omega(adj, t))
            return false;
        if (t == 0)
            break;
    }
    return true;
}

/// Smallest t such that V splits into t classes each inducing a perfect graph;
/// classes are enumerated as restricted growth strings.
inline auto chi_p(const Graph & g) -> int
{
    auto n = g.vertex_count();
    if (n == 0)
        return 0;
    auto adj = adjacency(g);
    std::vector<char> perfect_set(std::size_t{1} << n);
    // perfect: chi = omega here and after deleting any one vertex
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        perfect_set[s] = chi(adj, s) == omega(adj, s);
        for (auto v : members(s))
            perfect_set[s] = perfect_set[s] && perfect_set[s & ~(Mask{1} << v)];
    }
    for (int t = 1;; ++t) {
        std::vector<int> label(n, 0);
        while (true) {
            std::vector<Mask> classes(t, 0);
            for (int v = 0; v < n; ++v)
                classes[label[v]] |= Mask{1} << v;
            if (std::all_of(classes.begin(), classes.end(), [&](Mask c) { return perfect_set[c]; }))
                return t;
            // next restricted growth string with values < t
            int i = n - 1;
            for (; i > 0; --i) {
                auto bound = *std::max_element(label.begin(), label.begin() + i) + 1;
                if (label[i] < std::min(bound, t - 1)) {
                    ++label[i];
                    std::fill(label.begin() + i + 1, label.end(), 0);
                    break;
                }
            }
            if (i == 0)
                break;
        }
    }
}

/// max over all induced H of |H| - alpha(H) omega(H).
inline auto slack(const Graph & g) -> int
{
    auto adj = adjacency(g);
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s)
        best = std::max(best, std::popcount(s) - alpha(adj, s) * omega(adj, s));
    return best;
}

/// chi(H) - omega(H) <= 1 for every induced H.
inline auto nice(const Graph & g) -> bool
{
    auto adj = adjacency(g);
    for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s)
        if (chi(adj, s) - omega(adj, s) >= 2)
            return false;
    return true;
}

/// Lexicographically smallest upper-triangle adjacency string over all n!
/// relabellings.
inline auto canonical_string(const Graph & g) -> std::string
{
    auto n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

/// h is an induced subgraph of g, by trying every injective map.
inline auto embeds(const Graph & h, const Graph & g) -> bool
{
    auto k = h.vertex_count(), n = g.vertex_count();
    if (k > n)
        return false;
    std::vector<int> image;
    std::vector<char> used(n, 0);
    auto place = [&](auto & self) -> bool {
        auto i = static_cast<int>(image.size());
        if (i == k)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = h.adjacent(i, j) == g.adjacent(v, image[j]);
            if (! ok)
                continue;
            used[v] = 1;
            image.push_back(v);
            if (self(self))
                return true;
            image.pop_back();
            used[v] = 0;
        }
        return false;
    };
    return place(place);
}

/// Number of unlabeled graphs on n vertices, by Burnside over cycle types of
/// S_n acting on vertex pairs.
inline auto unlabeled_graph_count(int n) -> std::uint64_t
{
    // sum over partitions of n of 2^{c(λ)} / z(λ), with c the number of edge
    // cycles; accumulated as a rational with denominator n!
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n; ++i)
        factorial *= static_cast<std::uint64_t>(i);
    unsigned __int128 total = 0;
    std::vector<int> parts;
    auto visit = [&]() {
        std::uint64_t edge_cycles = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto a = static_cast<std::uint64_t>(parts[i]);
            edge_cycles += a / 2;
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                edge_cycles += std::gcd(a, static_cast<std::uint64_t>(parts[j]));
        }
        // permutations with this cycle type: n! / prod(a^m_a m_a!)
        unsigned __int128 z = 1;
        std::vector<int> mult(n + 1, 0);
        for (auto a : parts)
            ++mult[a];
        for (int a = 1; a <= n; ++a)
            for (int m = 1; m <= mult[a]; ++m)
                z *= static_cast<unsigned __int128>(a) * static_cast<unsigned>(m);
        total += (static_cast<unsigned __int128>(factorial) / z) * (static_cast<unsigned __int128>(1) << edge_cycles);
    };
    auto rec = [&](auto & self, int remaining, int largest) -> void {
        if (remaining == 0) {
            visit();
            return;
        }
        for (int a = std::min(remaining, largest); a >= 1; --a) {
            parts.push_back(a);
            self(self, remaining - a, a);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return static_cast<std::uint64_t>(total / factorial);
}

inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
{
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng))
                g.add_edge(u, v);
    return g;
}

/// Every labelled graph on n vertices, as edge masks over the pairs (i<j) in
/// row order.
template <typename F>
void for_each_labelled(int n, F && f)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (m >> b & 1)
                g.add_edge(pairs[b].first, pairs[b].second);
        f(g);
    }
}

/// Connected 4-regular graphs on n >= 5 vertices up to isomorphism: backtrack
/// over labelled 4-regular graphs with N(0) = {1, 2, 3, 4} (every class has
/// such a labelling), then keep one per brute-force canonical string.
inline auto four_regular_classes(int n) -> std::size_t
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<std::string> seen;
    std::vector<int> degree(n, 0);
    Graph g(n);
    for (int v = 1; v <= 4; ++v) {
        g.add_edge(0, v);
        ++degree[0];
        ++degree[v];
    }
    auto rec = [&](auto & self, std::size_t b) -> void {
        if (b == pairs.size()) {
            if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 4; }) && holeforge::is_connected(g))
                seen.push_back(canonical_string(g));
            return;
        }
        auto [u, v] = pairs[b];
        // u's row ends at pair (u, n-1): its degree must be 4 by then
        auto closes_row = v == n - 1;
        if (degree[u] < 4 && degree[v] < 4) {
            g.add_edge(u, v);
            ++degree[u];
            ++degree[v];
            if (! closes_row || degree[u] == 4)
                self(self, b + 1);
            g.remove_edge(u, v);
            --degree[u];
            --degree[v];
        }
        if (! closes_row || degree[u] == 4)
            self(self, b + 1);
    };
    rec(rec, 0);
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

} // namespace oracle
