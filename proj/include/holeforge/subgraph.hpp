#pragma once

#include <holeforge/graph.hpp>

#include <optional>

namespace holeforge {

/// Find an induced copy of h in g. Pattern vertices are placed in index order,
/// each trying host vertices in increasing order, so the result is the
/// lexicographically first embedding.
auto is_induced_subgraph(const Graph & h, const Graph & g) -> std::optional<Embedding>;

auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

} // namespace holeforge
