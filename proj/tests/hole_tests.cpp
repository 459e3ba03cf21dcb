#include "oracles.hpp"

#include <holeforge/canonical.hpp>
#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>
#include <holeforge/holes.hpp>

#include <doctest.h>

#include <set>

using namespace holeforge;

namespace {
    auto as_mask(const Cycle & c) -> oracle::Mask
    {
        oracle::Mask m = 0;
        for (auto v : c)
            m |= oracle::Mask{1} << v;
        return m;
    }

    void check_holes(const Graph & g)
    {
        auto n = g.vertex_count();
        if (n >= 3) {
            auto report = enumerate_induced_cycles(g, 3, n);
            std::vector<oracle::Mask> found;
            for (auto & c : report.cycles) {
                CHECK(is_induced_cycle(g, c));
                CHECK(c.front() == *std::min_element(c.begin(), c.end()));
                CHECK(c[1] < c.back());
                found.push_back(as_mask(c));
            }
            std::sort(found.begin(), found.end());
            auto expected = oracle::induced_cycle_sets(g, 3, n);
            CHECK(found == expected);
        }

        auto long_hole = has_long_hole(g);
        CHECK(long_hole.has_value() == oracle::has_cycle_length(g, 5, false, false));
        if (long_hole) {
            CHECK(long_hole->size() >= 5);
            CHECK(is_induced_cycle(g, *long_hole));
        }

        auto hole = find_hole(g);
        CHECK(hole.has_value() == oracle::has_cycle_length(g, 4, false, false));
        if (hole)
            CHECK(is_induced_cycle(g, *hole));

        auto chordal = is_chordal(g);
        CHECK(chordal.chordal == ! hole.has_value());
        if (! chordal.chordal)
            CHECK(is_induced_cycle(g, chordal.hole));

        auto odd = find_odd_hole(g);
        CHECK(odd.has_value() == oracle::has_cycle_length(g, 5, true, false));
        auto even = find_even_hole(g);
        CHECK(even.has_value() == oracle::has_cycle_length(g, 4, false, true));

        auto perfect = is_perfect(g);
        CHECK(perfect.perfect == oracle::perfect(g));
        if (! perfect.perfect) {
            CHECK(perfect.witness.size() % 2 == 1);
            CHECK(is_induced_cycle(perfect.witness_is_antihole ? complement(g) : g, perfect.witness));
        }
    }

    auto is_elimination_order(const Graph & g, const std::vector<Vertex> & order) -> bool
    {
        auto n = g.vertex_count();
        if (static_cast<int>(order.size()) != n)
            return false;
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;
        for (auto v : order) {
            auto later = g.empty_set();
            for (auto w : g.neighbours(v))
                if (pos[w] > pos[v])
                    later.insert(w);
            if (! is_clique(g, later))
                return false;
        }
        return true;
    }
}

TEST_CASE("hole queries on every graph up to 7 vertices")
{
    for (int n = 0; n <= 7; ++n)
        enumerate_graphs(n, {}, [](const Graph & g) { check_holes(g); });
}

TEST_CASE("hole queries on random labelled graphs")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        auto n = 5 + static_cast<int>(rng() % 6);
        check_holes(oracle::random_graph(rng, n, std::uniform_real_distribution<double>(0.15, 0.7)(rng)));
    }
}

TEST_CASE("induced cycle enumeration bounds and guard")
{
    CHECK_THROWS_AS(enumerate_induced_cycles(cycle(5), 2, 5), InputError);
    CHECK_THROWS_AS(enumerate_induced_cycles(cycle(5), 6, 5), InputError);
    CHECK(enumerate_induced_cycles(antihole(7), 4, 4).cycles.size() == 7);
    auto capped = enumerate_induced_cycles(complete(6), 3, 3, 5);
    CHECK(capped.truncated);
    CHECK(capped.cycles.size() == 5);
}

TEST_CASE("long holes")
{
    CHECK(has_long_hole(cycle(5)));
    CHECK(has_long_hole(cycle(9))->size() == 9);
    CHECK(! has_long_hole(cycle(4)));
    CHECK(! has_long_hole(antihole(7)));
    CHECK(! has_long_hole(scott_seymour(2)));
    CHECK(has_long_hole(grotzsch()));
}

TEST_CASE("chordality with elimination orders")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.6);
        auto r = is_chordal(g);
        if (r.chordal)
            CHECK(is_elimination_order(g, r.elimination_order));
    }
    CHECK(is_chordal(complete(5)).chordal);
    CHECK(! is_chordal(cycle(4)).chordal);
}

TEST_CASE("chordal bipartite and weakly chordal")
{
    CHECK(is_chordal_bipartite(cycle(4)));
    CHECK(is_chordal_bipartite(complete_bipartite(3, 3)));
    CHECK(! is_chordal_bipartite(cycle(6)));
    CHECK(! is_chordal_bipartite(cycle(3)));
    CHECK(is_weakly_chordal(cycle(4)));
    CHECK(! is_weakly_chordal(cycle(5)));
    CHECK(! is_weakly_chordal(antihole(7)));
    CHECK(! is_weakly_chordal(antihole(6)));
}

TEST_CASE("parity classes")
{
    CHECK(parity_class(path(5)) == Parity::acyclic);
    CHECK(parity_class(Graph(0)) == Parity::acyclic);
    CHECK(parity_class(cycle(6)) == Parity::all_even);
    CHECK(parity_class(complete(4)) == Parity::all_odd);
    CHECK(parity_class(cycle(5)) == Parity::all_odd);
    CHECK(parity_class(antihole(7)) == Parity::mixed);
    CHECK(to_string(Parity::mixed) == "mixed");

    // agreement with the definition on all small graphs
    for (int n = 0; n <= 7; ++n)
        enumerate_graphs(n, {}, [](const Graph & g) {
            std::set<int> parities;
            for (auto s : oracle::induced_cycle_sets(g, 3, std::max(3, g.vertex_count())))
                parities.insert(std::popcount(s) % 2);
            auto expected = parities.empty() ? Parity::acyclic
                    : parities.size() == 2   ? Parity::mixed
                    : *parities.begin() == 0 ? Parity::all_even
                                             : Parity::all_odd;
            CHECK(parity_class(g) == expected);
        });
}

TEST_CASE("bisimplicial elimination")
{
    CHECK(find_bisimplicial(cycle(5)) == 0);
    CHECK(find_bisimplicial(complete(4)) == 0);
    // the centre of a claw has three pairwise non-adjacent neighbours
    auto claw = complete_bipartite(1, 3);
    CHECK(find_bisimplicial(claw) == 1);

    auto c = bisimplicial_elimination_coloring(cycle(7));
    CHECK(is_proper(cycle(7), c));
    CHECK(c.colors_used() <= 3);

    // every vertex of K_{3,3} has a stable neighbourhood of size 3
    try {
        bisimplicial_elimination_coloring(complete_bipartite(3, 3));
        FAIL("expected NoBisimplicialVertex");
    }
    catch (const NoBisimplicialVertex & e) {
        CHECK(e.stuck().vertex_count() == 6);
        CHECK(e.vertices().size() == 6);
    }
}

TEST_CASE("perfection")
{
    CHECK(is_perfect(complete(6)).perfect);
    CHECK(is_perfect(cycle(6)).perfect);
    auto c5 = is_perfect(cycle(5));
    CHECK(! c5.perfect);
    auto anti = is_perfect(antihole(7));
    CHECK(! anti.perfect);
    CHECK(anti.witness_is_antihole);
    CHECK(anti.witness.size() == 7);
    CHECK_THROWS_AS(is_perfect(complete(10), 9), CapExceeded);

    CHECK(imperfect_through(cycle(5), 2));
    CHECK(imperfect_through(antihole(7), 0));
    auto g = disjoint_union(cycle(5), complete(1));
    CHECK(! imperfect_through(g, 5));
}

TEST_CASE("classification flags")
{
    auto f = classify(antihole(7));
    CHECK(f.long_hole_free);
    CHECK(! f.perfect);
    CHECK(! f.chordal);
    CHECK(! f.weakly_chordal);
    CHECK(f.odd_hole_free);
    CHECK(! f.even_hole_free);
    CHECK(f.parity == Parity::mixed);
    CHECK(! f.same_parity);
    CHECK(f.perfect_witness_is_antihole);

    auto c = classify(cycle(6));
    CHECK(c.chordal_bipartite == false);
    CHECK(c.parity == Parity::all_even);
    CHECK(c.same_parity);
    CHECK(c.perfect);
}
