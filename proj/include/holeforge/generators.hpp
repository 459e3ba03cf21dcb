#pragma once

#include <holeforge/graph.hpp>

namespace holeforge {

// Labelling is fixed: cycles and paths are numbered along the cycle or path,
// so every construction is reproducible vertex for vertex.

auto cycle(int n) -> Graph;
/// Path on n vertices (n - 1 edges).
auto path(int n) -> Graph;
auto complete(int n) -> Graph;
auto edgeless(int n) -> Graph;
auto complete_bipartite(int a, int b) -> Graph;
/// complement(cycle(n)).
auto antihole(int n) -> Graph;

/// Vertex i of the result is the i-th edge of g in Graph::edges() order.
auto line_graph(const Graph & g) -> Graph;

/// Vertices 0..n-1 copy g, n..2n-1 are their shadows, 2n is the apex.
auto mycielskian(const Graph & g) -> Graph;
auto grotzsch() -> Graph;

/// Path 0..k (k edges) with two pendant leaves at each end: k+1, k+2 hang
/// off 0 and k+3, k+4 off k. Pairwise induced-incomparable for distinct k,
/// since the two branch vertices sit exactly k apart.
auto tree_T(int k) -> Graph;

/// G_0 = K_1; G_k substitutes antihole(7) for every vertex of G_{k-1}.
auto scott_seymour(int k) -> Graph;

} // namespace holeforge
