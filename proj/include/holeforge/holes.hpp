#pragma once

#include <holeforge/graph.hpp>
#include <holeforge/invariants.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace holeforge {

/// Cyclic vertex sequence.
using Cycle = std::vector<Vertex>;

struct HoleReport
{
    std::vector<Cycle> cycles;
    bool truncated = false;
};

/// Consecutive vertices adjacent (cyclically), every other pair non-adjacent,
/// no repeats, length >= 3.
auto is_induced_cycle(const Graph & g, std::span<const Vertex> cycle) -> bool;

/// Calls visit(cycle) for every induced cycle with length in [min_len,
/// max_len], once each: the cycle starts at its smallest vertex and its second
/// vertex is smaller than its last. Stops when visit returns true; returns
/// whether it was stopped.
auto for_each_induced_cycle(const Graph & g, int min_len, int max_len, const std::function<bool(std::span<const Vertex>)> & visit)
        -> bool;

auto enumerate_induced_cycles(const Graph & g, int min_len, int max_len, std::size_t cycle_cap = 1'000'000) -> HoleReport;

/// Hole of length >= 5, or nullopt. Looks for an induced P4 a-b-c-d whose ends
/// are joined by a path avoiding N[b] and N[c]; polynomial, early exit.
auto has_long_hole(const Graph & g) -> std::optional<Cycle>;

/// Any hole (length >= 4), or nullopt.
auto find_hole(const Graph & g) -> std::optional<Cycle>;

struct ChordalResult
{
    bool chordal = false;
    /// Perfect elimination ordering when chordal.
    std::vector<Vertex> elimination_order;
    /// Hole when not chordal.
    Cycle hole;
};

/// Maximum cardinality search; the reverse visit order is checked as a perfect
/// elimination ordering.
auto is_chordal(const Graph & g) -> ChordalResult;
auto is_chordal_bipartite(const Graph & g) -> bool;
auto is_weakly_chordal(const Graph & g) -> bool;

enum class Parity
{
    acyclic,
    all_even,
    all_odd,
    mixed
};

auto to_string(Parity p) -> std::string;

auto parity_class(const Graph & g) -> Parity;

auto find_even_hole(const Graph & g) -> std::optional<Cycle>;
/// Induced odd cycle of length >= 5.
auto find_odd_hole(const Graph & g) -> std::optional<Cycle>;

/// First vertex whose neighbourhood is the union of two cliques.
auto find_bisimplicial(const Graph & g) -> std::optional<Vertex>;

class NoBisimplicialVertex : public std::runtime_error
{
public:
    NoBisimplicialVertex(Graph stuck, std::vector<Vertex> vertices) :
        std::runtime_error("no bisimplicial vertex in remaining subgraph"), stuck_(std::move(stuck)), vertices_(std::move(vertices))
    {
    }

    auto stuck() const -> const Graph & { return stuck_; }
    /// Original labels of the stuck subgraph's vertices.
    auto vertices() const -> const std::vector<Vertex> & { return vertices_; }

private:
    Graph stuck_;
    std::vector<Vertex> vertices_;
};

/// Repeatedly delete a bisimplicial vertex, then colour greedily in reverse
/// deletion order. At most 2*omega - 1 colours when every step succeeds.
auto bisimplicial_elimination_coloring(const Graph & g) -> Coloring;

struct PerfectResult
{
    bool perfect = true;
    /// Odd hole of g, or odd hole of the complement (an odd antihole of g).
    Cycle witness;
    bool witness_is_antihole = false;
};

auto is_perfect(const Graph & g, int vertex_cap = 64) -> PerfectResult;

/// Whether g has an odd hole or odd antihole through v. With g - v perfect
/// this decides whether g is perfect.
auto imperfect_through(const Graph & g, Vertex v) -> bool;

struct ClassFlags
{
    bool chordal = false;
    bool chordal_bipartite = false;
    bool long_hole_free = false;
    bool weakly_chordal = false;
    Parity parity = Parity::acyclic;
    bool same_parity = false;
    bool even_hole_free = false;
    bool odd_hole_free = false;
    bool perfect = false;

    Cycle chordal_witness;
    Cycle long_hole_witness;
    Cycle complement_long_hole_witness;
    Cycle even_hole_witness;
    Cycle odd_hole_witness;
    Cycle perfect_witness;
    bool perfect_witness_is_antihole = false;
};

auto classify(const Graph & g, int vertex_cap = 64) -> ClassFlags;

} // namespace holeforge
