#include "oracles.hpp"

#include <holeforge/canonical.hpp>
#include <holeforge/class_lab.hpp>
#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>
#include <holeforge/graph6.hpp>
#include <holeforge/subgraph.hpp>

#include <doctest.h>

#include <cmath>

using namespace holeforge;

namespace {
    auto long_hole_free(const Graph & g) -> bool { return ! has_long_hole(g); }

    void check_bipartition(const Graph & g, const std::pair<VertexSet, VertexSet> & split)
    {
        auto [a, b] = split;
        CHECK((a | b) == g.vertices());
        CHECK(! a.intersects(b));
        auto omega = clique_number(g).size;
        for (auto & c : maximum_cliques(g)) {
            auto s = VertexSet::from_range(g.vertex_count(), c);
            CHECK(s.intersects(a));
            CHECK(s.intersects(b));
        }
        CHECK(clique_number(g, a).size < omega);
        CHECK(clique_number(g, b).size < omega);
    }
}

TEST_CASE("clique-splitting bipartitions")
{
    auto k2 = check_bipartition_conjecture(complete(2));
    REQUIRE(k2);
    check_bipartition(complete(2), *k2);
    auto anti = check_bipartition_conjecture(antihole(7));
    REQUIRE(anti);
    check_bipartition(antihole(7), *anti);
    CHECK_THROWS_AS(check_bipartition_conjecture(cycle(5)), InputError);

    for (int n = 2; n <= 6; ++n)
        enumerate_graphs(n, [](const Graph & g) { return clique_number(g).size >= 2; }, [](const Graph & g) {
            auto split = check_bipartition_conjecture(g);
            REQUIRE(split);
            check_bipartition(g, *split);
        }, {9, long_hole_free});
}

TEST_CASE("chi at most omega squared")
{
    auto v = check_chi_omega_sq(antihole(7));
    CHECK(v.omega == 3);
    CHECK(v.chi.value() == 4);
    CHECK(v.omega_squared == 9);
    CHECK(v.holds);
    auto c5 = check_chi_omega_sq(cycle(5));
    CHECK(c5.holds);
    auto k1 = check_chi_omega_sq(complete(1));
    CHECK(k1.holds);
}

TEST_CASE("F4 search produces certified lower bounds")
{
    F4Budget budget;
    budget.omega = 3;
    budget.exhaustive_n = 6;
    budget.random_trials = 20;
    budget.substitution_trials = 20;
    auto r = f4_search(budget);
    CHECK(r.omega == 3);
    CHECK(r.best_chi >= 4);
    REQUIRE(r.witness);
    CHECK(! has_long_hole(*r.witness));
    CHECK(clique_number(*r.witness).size == 3);
    CHECK(chromatic_number(*r.witness).value() == r.best_chi);
    CHECK(r.graphs_examined > 0);

    auto again = f4_search(budget);
    CHECK(again.best_chi == r.best_chi);
    CHECK(write_graph6(*again.witness) == write_graph6(*r.witness));
}

TEST_CASE("Gyarfas slack")
{
    CHECK(gyarfas_slack(cycle(5)).slack == 1);
    CHECK(gyarfas_slack(complete(5)).slack == 0);
    CHECK(gyarfas_slack(Graph(0)).slack == 0);
    auto both = gyarfas_slack(disjoint_union(cycle(5), cycle(7)));
    CHECK(both.slack == 2);
    CHECK(both.witness.size() == 12);
    CHECK(both.witness_alpha == 5);
    CHECK(both.witness_omega == 2);
    CHECK_THROWS_AS(gyarfas_slack(edgeless(21)), CapExceeded);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, static_cast<int>(rng() % 11), 0.45);
        auto r = gyarfas_slack(g);
        CHECK(r.slack == oracle::slack(g));
        auto h = induced(g, r.witness);
        CHECK(r.witness_alpha == stability_number(h).size);
        CHECK(r.witness_omega == clique_number(h).size);
        CHECK(r.slack == std::max(0, r.witness.size() - r.witness_alpha * r.witness_omega));
    }
}

TEST_CASE("anticomplete odd holes")
{
    CHECK(max_anticomplete_odd_holes(cycle(5)).count == 1);
    CHECK(max_anticomplete_odd_holes(cycle(6)).count == 0);
    CHECK(max_anticomplete_odd_holes(antihole(7)).count == 0);
    auto two = max_anticomplete_odd_holes(disjoint_union(cycle(5), cycle(7)));
    CHECK(two.count == 2);
    CHECK(two.holes.size() == 2);

    // joined holes are disjoint but not anticomplete
    auto joined = complement(disjoint_union(complement(cycle(5)), complement(cycle(5))));
    CHECK(max_anticomplete_odd_holes(joined).count == 1);

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 7), 0.3);
        auto r = max_anticomplete_odd_holes(g);
        CHECK(r.count <= gyarfas_slack(g).slack);
        for (std::size_t i = 0; i < r.holes.size(); ++i) {
            CHECK(r.holes[i].size() % 2 == 1);
            CHECK(r.holes[i].size() >= 5);
            CHECK(is_induced_cycle(g, r.holes[i]));
            auto si = VertexSet::from_range(g.vertex_count(), r.holes[i]);
            for (std::size_t j = i + 1; j < r.holes.size(); ++j)
                for (auto v : r.holes[j])
                    CHECK(! (g.neighbours(v) | VertexSet::of(g.vertex_count(), {v})).intersects(si));
        }
    }
}

TEST_CASE("Erdos-Hajnal exponent")
{
    auto c5 = eh_exponent(cycle(5));
    CHECK(c5.alpha == 2);
    CHECK(c5.omega == 2);
    CHECK(c5.exponent == doctest::Approx(std::log(2.0) / std::log(5.0)).epsilon(1e-12));
    CHECK(c5.exponent == doctest::Approx(0.4307).epsilon(1e-4));
    CHECK(eh_exponent(complete(4)).exponent == doctest::Approx(1.0));
    CHECK_THROWS_AS(eh_exponent(complete(1)), InputError);
}

TEST_CASE("antichains")
{
    CHECK(verify_antichain({cycle(3), cycle(4), cycle(5)}).is_antichain);
    auto paths = verify_antichain({path(3), path(4)});
    CHECK(! paths.is_antichain);
    REQUIRE(paths.offending);
    CHECK(paths.offending->first == 0);
    CHECK(paths.offending->second == 1);

    std::vector<Graph> trees;
    for (int k = 1; k <= 6; ++k)
        trees.push_back(tree_T(k));
    CHECK(verify_antichain(trees).is_antichain);
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = 0; j < trees.size(); ++j)
            if (i != j)
                CHECK(! oracle::embeds(trees[i], trees[j]));
}

TEST_CASE("connected 4-regular graphs")
{
    std::vector<std::size_t> expected{1, 1, 2, 6};
    for (int n = 5; n <= 8; ++n) {
        auto graphs = enumerate_connected_4_regular(n);
        CHECK(graphs.size() == expected[n - 5]);
        CHECK(graphs.size() == oracle::four_regular_classes(n));
        for (auto & g : graphs) {
            CHECK(g.min_degree() == 4);
            CHECK(g.max_degree() == 4);
            CHECK(is_connected(g));
        }
        CHECK(verify_antichain(graphs).is_antichain);
    }
    CHECK(enumerate_connected_4_regular(9).size() == 16);
    CHECK_THROWS_AS(enumerate_connected_4_regular(4), InputError);
    CHECK_THROWS_AS(enumerate_connected_4_regular(11), CapExceeded);
}

TEST_CASE("forbidden sequences")
{
    auto one = realize_forbidden_sequence({0, 0, 0, 0, 1});
    REQUIRE(one.selected.size() == 1);
    CHECK(are_isomorphic(one.selected[0], complete(5)));
    CHECK(one.sizes.back().feasible);
    CHECK(! one.admits(complete(6)));
    CHECK(one.admits(cycle(5)));
    CHECK(one.admits(complete(4)));

    auto two = realize_forbidden_sequence({0, 0, 0, 0, 2});
    CHECK(! two.sizes.back().feasible);
    CHECK(two.sizes.back().available == 1);
    CHECK(two.selected.size() == 1);

    auto mixed = realize_forbidden_sequence({0, 0, 0, 0, 1, 0, 0, 3});
    CHECK(mixed.selected.size() == 4);
    CHECK(mixed.sizes.back().feasible);

    CHECK(class_membership(cycle(5), {complete(3)}));
    CHECK(! class_membership(antihole(7), {complete(3)}));
}

TEST_CASE("planarity")
{
    CHECK(is_planar(complete(4)));
    CHECK(! is_planar(complete(5)));
    CHECK(! is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(grotzsch()) == false);
    CHECK(is_planar(Graph(0)));
    CHECK(is_planar(cycle(9)));
}

TEST_CASE("corpora")
{
    CorpusParams params;
    params.seed = 7;
    params.count = 30;
    params.n_min = 4;
    params.n_max = 14;

    auto chordal = corpus(CorpusKind::random_chordal, params);
    CHECK(chordal.size() == 30);
    for (auto & g : chordal) {
        CHECK(is_chordal(g).chordal);
        CHECK(g.vertex_count() >= 4);
        CHECK(g.vertex_count() <= 14);
    }

    auto lhf = corpus(CorpusKind::random_long_hole_free, params);
    CHECK(lhf.size() == 30);
    for (auto & g : lhf)
        CHECK(! has_long_hole(g));

    auto subst = corpus(CorpusKind::substitution_closure, params);
    CHECK(subst.size() == 30);
    for (auto & g : subst)
        CHECK(! has_long_hole(g));

    auto again = corpus(CorpusKind::substitution_closure, params);
    for (std::size_t i = 0; i < subst.size(); ++i)
        CHECK(write_graph6(again[i]) == write_graph6(subst[i]));

    CorpusParams small;
    small.n_min = 1;
    small.n_max = 5;
    CHECK(corpus(CorpusKind::exhaustive, small).size() == 1 + 2 + 4 + 11 + 34);
    small.long_hole_free_only = true;
    CHECK(corpus(CorpusKind::exhaustive, small).size() == 1 + 2 + 4 + 11 + 33);

    CHECK(parse_corpus_kind("random_chordal") == CorpusKind::random_chordal);
    CHECK_THROWS_AS(parse_corpus_kind("nope"), InputError);
}
