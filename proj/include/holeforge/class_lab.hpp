#pragma once

#include <holeforge/canonical.hpp>
#include <holeforge/graph.hpp>
#include <holeforge/holes.hpp>
#include <holeforge/invariants.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holeforge {

/// Partition of V(g) into two sides, neither containing a maximum clique.
/// Throws InputError when g has a hole of length >= 5, CapExceeded above the
/// cap. nullopt is an exhaustive refutation for this graph (always the case
/// when omega <= 1, since then every vertex is a maximum clique).
auto check_bipartition_conjecture(const Graph & g, int vertex_cap = 40) -> std::optional<std::pair<VertexSet, VertexSet>>;

struct ChiOmegaVerdict
{
    int omega = 0;
    ChromaticResult chi;
    int omega_squared = 0;
    bool holds = true;
};

/// chi <= omega^2. Decided from the solver's bounds when it times out; throws
/// CapExceeded only when the bounds straddle omega^2.
auto check_chi_omega_sq(const Graph & g, const SolverOptions & options = {}) -> ChiOmegaVerdict;

struct F4Budget
{
    int omega = 4;
    std::uint64_t seed = 0;
    /// Exhaustive enumeration of long-hole-free graphs up to this size.
    int exhaustive_n = 7;
    int random_trials = 200;
    int random_max_n = 14;
    /// Substitution combinations tried.
    int substitution_trials = 200;
    int substitution_max_n = 24;
    double timeout_seconds = 2.0;
};

struct F4Record
{
    int omega = 0;
    /// Largest exact chromatic number seen among graphs with clique number
    /// omega; a lower bound on the extremal value, never the value itself.
    int best_chi = 0;
    std::optional<Graph> witness;
    std::string source;
    long graphs_examined = 0;
    /// Chromatic computations that timed out; they contribute nothing.
    long unknown = 0;
};

auto f4_search(const F4Budget & budget = {}) -> F4Record;

struct SlackReport
{
    /// max over induced H of |V(H)| - alpha(H) omega(H), at least 0.
    int slack = 0;
    VertexSet witness;
    int witness_alpha = 0;
    int witness_omega = 0;
};

/// Exact, over all 2^n induced subgraphs with alpha and omega filled in by a
/// subset recurrence. Throws CapExceeded above the cap (at most 26).
auto gyarfas_slack(const Graph & g, int vertex_cap = 20) -> SlackReport;

struct AnticompleteHoles
{
    int count = 0;
    std::vector<Cycle> holes;
};

/// Largest family of odd holes, pairwise vertex-disjoint with no edges
/// between them. Throws CapExceeded above the vertex cap or when there are
/// more than `hole_cap` odd holes.
auto max_anticomplete_odd_holes(const Graph & g, int vertex_cap = 24, std::size_t hole_cap = 4096) -> AnticompleteHoles;

struct EHReport
{
    int n = 0;
    int alpha = 0;
    int omega = 0;
    /// log max(alpha, omega) / log n.
    double exponent = 0.0;
};

auto eh_exponent(const Graph & g) -> EHReport;

struct AntichainReport
{
    std::vector<Graph> graphs;
    bool is_antichain = true;
    /// (i, j): graphs[i] is an induced subgraph of graphs[j].
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

auto verify_antichain(std::vector<Graph> graphs) -> AntichainReport;

/// One canonical representative per isomorphism class. n >= 5.
auto enumerate_connected_4_regular(int n, int n_cap = 10) -> std::vector<Graph>;

struct ForbiddenSize
{
    int n = 0;
    int requested = 0;
    /// Connected 4-regular graphs on n vertices; nullopt above the cap.
    std::optional<int> available;
    bool feasible = false;
};

struct ForbiddenSequenceRealization
{
    std::vector<int> requested;
    std::vector<ForbiddenSize> sizes;
    std::vector<Graph> selected;

    /// Membership in the class of graphs containing none of `selected`.
    auto admits(const Graph & g) const -> bool;
};

/// requested[i] is the number of forbidden graphs on i + 1 vertices. Picks the
/// first requested[i] connected 4-regular graphs in enumeration order; sizes
/// without enough of them, or above n_cap, are flagged infeasible and
/// contribute what exists.
auto realize_forbidden_sequence(const std::vector<int> & requested, int n_cap = 10) -> ForbiddenSequenceRealization;

/// No graph of `forbidden` is an induced subgraph of g.
auto class_membership(const Graph & g, const std::vector<Graph> & forbidden) -> bool;

auto is_planar(const Graph & g) -> bool;

enum class CorpusKind
{
    random_chordal,
    random_long_hole_free,
    substitution_closure,
    exhaustive
};

auto to_string(CorpusKind k) -> std::string;
/// Throws InputError on an unknown name.
auto parse_corpus_kind(const std::string & name) -> CorpusKind;

struct CorpusParams
{
    std::uint64_t seed = 0;
    int count = 100;
    int n_min = 1;
    int n_max = 12;
    double edge_probability = 0.5;
    /// exhaustive: every graph with n_min <= n <= n_max, optionally only the
    /// long-hole-free ones; count and seed are ignored.
    bool long_hole_free_only = false;
    int enumeration_cap = 9;
};

/// Same parameters, same stream.
void corpus(CorpusKind kind, const CorpusParams & params, const GraphVisitor & visit);
auto corpus(CorpusKind kind, const CorpusParams & params) -> std::vector<Graph>;

} // namespace holeforge
