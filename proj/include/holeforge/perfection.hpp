#pragma once

#include <holeforge/graph.hpp>
#include <holeforge/invariants.hpp>

#include <optional>
#include <vector>

namespace holeforge {

/// Vertex partition whose classes each induce a perfect graph.
struct PerfectPartition
{
    std::vector<VertexSet> classes;
};

/// Classes nonempty, disjoint, covering V(g), each inducing a perfect graph.
auto is_valid_perfect_partition(const Graph & g, const PerfectPartition & p) -> bool;

struct ChiPBounds
{
    int lo = 0;
    int hi = 0;
};

/// ceil(chi / omega) <= chi_p <= ceil(chi / 2). If the chromatic solver times
/// out its proven bounds stand in for chi, which keeps both sides valid.
/// Throws InputError on the empty graph.
auto chi_p_bounds(const Graph & g, const SolverOptions & options = {}) -> ChiPBounds;

struct ChiPResult
{
    SolveStatus status = SolveStatus::exact;
    /// Exact when status is exact; otherwise the best proven bounds.
    int value = 0;
    int lower = 0;
    int upper = 0;
    /// Witness with `value` (or `upper`) classes.
    PerfectPartition partition;

    auto exact() const -> bool { return status == SolveStatus::exact; }
};

struct ChiPOptions
{
    int vertex_cap = 24;
    double timeout_seconds = 0.0;
};

/// Minimum number of perfect classes. Tries t = lo, lo + 1, ... and assigns
/// vertices in a fixed order, cutting a branch as soon as the class just
/// extended contains an odd hole or odd antihole through the new vertex.
auto perfect_chromatic_number(const Graph & g, const ChiPOptions & options = {}) -> ChiPResult;

/// ceil(chi / 2) for triangle-free g; throws InputError when g has a triangle.
auto chi_p_triangle_free(const Graph & g, const SolverOptions & options = {}) -> int;

struct NiceReport
{
    bool is_nice = true;
    /// Induced subgraph with chi - omega >= 2, in g's labels.
    std::optional<VertexSet> witness;
    long subgraphs_checked = 0;
};

struct NiceOptions
{
    int vertex_cap = 11;
    double timeout_seconds = 0.0;
};

/// Checks chi(H) - omega(H) <= 1 over connected induced subgraphs H, largest
/// first, stopping at the first failure. A disconnected H attains both chi and
/// omega in some component with no smaller gap, so connected ones suffice.
/// Throws CapExceeded above the cap or when a chromatic number times out.
auto is_nice(const Graph & g, const NiceOptions & options = {}) -> NiceReport;

/// chi_p of the line graph of K_n; n is capped at 7 unless raised.
auto chi_p_of_line_complete(int n, const ChiPOptions & options = {}, int n_cap = 7) -> ChiPResult;

} // namespace holeforge
