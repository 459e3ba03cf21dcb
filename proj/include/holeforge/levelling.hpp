#pragma once

#include <holeforge/graph.hpp>
#include <holeforge/holes.hpp>
#include <holeforge/invariants.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holeforge {

/// Distance layers from a root: levels[0] = {root}, every vertex of level i > 0
/// has a neighbour in level i - 1 and none in levels below i - 1.
struct Levelling
{
    Vertex root = -1;
    std::vector<VertexSet> levels;

    auto level_of(Vertex v) const -> int;
};

/// Throws InputError when g is disconnected.
auto build_levelling(const Graph & g, Vertex root) -> Levelling;
/// Levelling of the component of g[within] containing root.
auto build_levelling(const Graph & g, Vertex root, const VertexSet & within) -> Levelling;

/// Levels 0..k of a levelling, with level k replaced by one component c of
/// g[L_k] and levels 0..k-1 pruned to a fixpoint: every survivor has a child
/// whose only surviving parent it is.
struct PrunedLevelling
{
    int k = 0;
    /// remaining[i] for i < k are the survivors of level i; remaining[k] = c.
    std::vector<VertexSet> remaining;
    /// Deleted vertices in deletion order.
    std::vector<Vertex> pruned;
};

/// Deletes, one at a time, the lowest-numbered vertex of levels 0..k-1 that
/// has no exclusive child, counting children on level k only inside c.
auto prune_for_component(const Graph & g, const Levelling & l, int k, const VertexSet & c) -> PrunedLevelling;

/// Checks both fixpoint invariants of a pruned levelling.
auto pruned_invariants_hold(const Graph & g, const PrunedLevelling & p) -> bool;

/// N(1) = 1, N(w) = 4 N(w-1)^2, i.e. 2^(2^w - 2).
struct PaletteBound
{
    std::uint64_t value = 0;
    /// Set when the exact value does not fit in 64 bits (omega > 6).
    bool saturated = false;

    auto admits(long long colors) const -> bool { return saturated || static_cast<std::uint64_t>(colors) <= value; }
};

auto palette_bound(int omega) -> PaletteBound;

class LongHoleDetected : public std::runtime_error
{
public:
    LongHoleDetected(Cycle witness, const std::string & diagnostic) :
        std::runtime_error(diagnostic), witness_(std::move(witness))
    {
    }

    auto witness() const -> const Cycle & { return witness_; }

private:
    Cycle witness_;
};

/// Per-level palette accounting gathered across the whole recursion.
struct PaletteAudit
{
    long levels_checked = 0;
    long level_budget_violations = 0;
    long component_budget_violations = 0;
    /// Largest number of colours any single level needed, across all frames.
    int widest_level = 0;
};

struct LevellingColoring
{
    Coloring coloring;
    PaletteAudit audit;
};

/// Colour a graph without holes of length >= 5 using at most
/// palette_bound(omega) colours. Unless `trust` is set the precondition is
/// verified first; either way, a failed internal step that can only happen in
/// the presence of a long hole raises LongHoleDetected with a witness.
auto color_long_hole_free(const Graph & g, bool trust = false) -> Coloring;
auto color_long_hole_free_audited(const Graph & g, bool trust = false) -> LevellingColoring;

struct ColoringReport
{
    int colors_used = 0;
    PaletteBound bound;
    int omega = 0;
    std::optional<int> chi_exact;
};

/// Run the levelling colouring and, when `exact` is set and the solver
/// finishes, attach the exact chromatic number.
auto coloring_report(const Graph & g, bool exact = true, const SolverOptions & options = {}, bool trust = false) -> ColoringReport;

} // namespace holeforge
