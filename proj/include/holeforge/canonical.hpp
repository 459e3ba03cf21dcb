#pragma once

#include <holeforge/graph.hpp>

#include <functional>
#include <string>
#include <vector>

namespace holeforge {

struct CanonicalForm
{
    /// position[v] is the canonical index of vertex v.
    std::vector<Vertex> position;
    Graph graph;
};

/// Canonical relabelling by equitable refinement plus individualisation,
/// keeping the lexicographically largest leaf and pruning with the
/// automorphisms found along the way.
auto canonical_form(const Graph & g) -> CanonicalForm;

/// Isomorphism-invariant key: graph6 text of the canonical form.
auto canonical_code(const Graph & g) -> std::string;

using GraphPredicate = std::function<bool(const Graph &)>;
using GraphVisitor = std::function<void(const Graph &)>;

struct EnumerationOptions
{
    int cap = 9;
    /// Must describe a hereditary class. Intermediate graphs failing it are
    /// cut together with all their extensions.
    GraphPredicate hereditary;
};

/// Visit one representative (in canonical form) of every isomorphism class of
/// n-vertex graphs that passes `filter`. Deterministic order. Built by
/// canonical augmentation: a child is kept only when the added vertex is a
/// canonical deletion vertex, then deduplicated among its siblings.
void enumerate_graphs(int n, const GraphPredicate & filter, const GraphVisitor & visit, const EnumerationOptions & options = {});

auto enumerate_graphs(int n, const GraphPredicate & filter = {}, const EnumerationOptions & options = {}) -> std::vector<Graph>;

/// Every graph on 0..n vertices, smallest first.
void enumerate_graphs_up_to(int n, const GraphPredicate & filter, const GraphVisitor & visit, const EnumerationOptions & options = {});

} // namespace holeforge
