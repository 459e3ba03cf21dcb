#pragma once

#include <holeforge/graph.hpp>

#include <chrono>
#include <optional>
#include <span>
#include <vector>

namespace holeforge {

/// Vertex colouring; colors are indices into a palette of `palette` entries.
struct Coloring
{
    std::vector<int> color;
    int palette = 0;

    auto colors_used() const -> int;
    auto operator==(const Coloring &) const -> bool = default;
};

/// Renumber colors to 0..k-1 in order of first appearance; sets palette = k.
auto compacted(Coloring c) -> Coloring;

auto is_proper(const Graph & g, const Coloring & c) -> bool;

/// First-fit along `order`, which must be a permutation of the vertices.
auto greedy_coloring(const Graph & g, std::span<const Vertex> order) -> Coloring;

/// Saturation-degree heuristic; an upper bound only.
auto dsatur_coloring(const Graph & g) -> Coloring;

class Deadline
{
public:
    Deadline() = default;
    /// Zero or negative means no limit.
    explicit Deadline(double seconds);

    auto expired() const -> bool;

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

struct SolverOptions
{
    int vertex_cap = 64;
    double timeout_seconds = 0.0;
};

enum class SolveStatus
{
    exact,
    timeout
};

struct CliqueResult
{
    int size = 0;
    std::vector<Vertex> witness;
};

/// Branch and bound with greedy colour-class bounds.
auto clique_number(const Graph & g) -> CliqueResult;
/// Clique number of g[within], witness in g's labels.
auto clique_number(const Graph & g, const VertexSet & within) -> CliqueResult;

/// Maximum stable set; witness is the stable set.
auto stability_number(const Graph & g) -> CliqueResult;

/// Every clique of maximum size, each sorted, in lexicographic order.
auto maximum_cliques(const Graph & g) -> std::vector<std::vector<Vertex>>;

struct ChromaticResult
{
    SolveStatus status = SolveStatus::exact;
    /// Proven bounds; equal when status is exact.
    int lower = 0;
    int upper = 0;
    /// Proper colouring with `upper` colors.
    Coloring witness;

    auto exact() const -> bool { return status == SolveStatus::exact; }
    auto value() const -> int { return upper; }
};

enum class Colorability
{
    colorable,
    not_colorable,
    timeout
};

/// Decide whether g has a proper k-colouring; `seed` must be a clique and is
/// pre-coloured 0..|seed|-1.
auto k_colorable(const Graph & g, int k, std::span<const Vertex> seed, const Deadline & deadline, Coloring * out = nullptr) -> Colorability;

/// Exact chromatic number by iterative deepening from max(omega, ceil(n/alpha)).
/// Throws CapExceeded above options.vertex_cap; a timeout is a result, not an
/// error.
auto chromatic_number(const Graph & g, const SolverOptions & options = {}) -> ChromaticResult;

/// chromatic_number(complement(g)); the witness colours the complement.
auto clique_cover_number(const Graph & g, const SolverOptions & options = {}) -> ChromaticResult;

struct InvariantReport
{
    int n = 0;
    int m = 0;
    int omega = 0;
    ChromaticResult chi;
    int alpha = 0;
    ChromaticResult theta;
    std::vector<Vertex> max_clique;
    std::vector<Vertex> max_stable;
};

auto analyze(const Graph & g, const SolverOptions & options = {}) -> InvariantReport;

} // namespace holeforge
