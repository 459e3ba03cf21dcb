#include "oracles.hpp"

#include <holeforge/canonical.hpp>
#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>
#include <holeforge/perfection.hpp>

#include <doctest.h>

using namespace holeforge;

TEST_CASE("chi_p bounds")
{
    auto k6 = chi_p_bounds(complete(6));
    CHECK(k6.lo == 1);
    CHECK(k6.hi == 3);
    auto c5 = chi_p_bounds(cycle(5));
    CHECK(c5.lo == 2);
    CHECK(c5.hi == 2);
    auto gr = chi_p_bounds(grotzsch());
    CHECK(gr.lo == 2);
    CHECK(gr.hi == 2);
    CHECK_THROWS_AS(chi_p_bounds(Graph(0)), InputError);
}

TEST_CASE("perfect chromatic numbers of named graphs")
{
    CHECK(perfect_chromatic_number(complete(6)).value == 1);
    CHECK(perfect_chromatic_number(edgeless(5)).value == 1);
    CHECK(perfect_chromatic_number(cycle(5)).value == 2);
    CHECK(perfect_chromatic_number(cycle(7)).value == 2);
    CHECK(perfect_chromatic_number(antihole(7)).value == 2);
    CHECK(perfect_chromatic_number(grotzsch()).value == 2);
    auto m = perfect_chromatic_number(mycielskian(grotzsch()));
    CHECK(m.exact());
    CHECK(m.value == 3);
    CHECK(is_valid_perfect_partition(mycielskian(grotzsch()), m.partition));
    CHECK_THROWS_AS(perfect_chromatic_number(complete(25)), CapExceeded);
}

TEST_CASE("perfect chromatic number against brute force on every graph up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, {}, [](const Graph & g) {
            auto r = perfect_chromatic_number(g);
            REQUIRE(r.exact());
            CHECK(r.value == oracle::chi_p(g));
            CHECK(static_cast<int>(r.partition.classes.size()) == r.value);
            CHECK(is_valid_perfect_partition(g, r.partition));
            auto b = chi_p_bounds(g);
            CHECK(b.lo <= r.value);
            CHECK(r.value <= b.hi);
        });
}

TEST_CASE("perfect chromatic number on random graphs")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(rng, 7 + static_cast<int>(rng() % 3), 0.5);
        auto r = perfect_chromatic_number(g);
        REQUIRE(r.exact());
        CHECK(r.value == oracle::chi_p(g));
        CHECK(is_valid_perfect_partition(g, r.partition));
    }
}

TEST_CASE("partition validity")
{
    auto g = cycle(5);
    CHECK(! is_valid_perfect_partition(g, {{g.vertices()}}));
    CHECK(is_valid_perfect_partition(g, {{VertexSet::of(5, {0, 1, 2}), VertexSet::of(5, {3, 4})}}));
    CHECK(! is_valid_perfect_partition(g, {{VertexSet::of(5, {0, 1, 2}), VertexSet::of(5, {2, 3, 4})}}));
    CHECK(! is_valid_perfect_partition(g, {{VertexSet::of(5, {0, 1, 2}), VertexSet::of(5, {3})}}));
    CHECK(! is_valid_perfect_partition(g, {{g.vertices(), VertexSet(5)}}));
}

TEST_CASE("triangle-free graphs need ceil(chi / 2) perfect classes")
{
    CHECK(chi_p_triangle_free(cycle(5)) == 2);
    CHECK(chi_p_triangle_free(grotzsch()) == 2);
    CHECK(chi_p_triangle_free(mycielskian(grotzsch())) == 3);
    CHECK(chi_p_triangle_free(cycle(6)) == 1);
    CHECK_THROWS_AS(chi_p_triangle_free(complete(3)), InputError);

    auto triangle_free = [](const Graph & g) { return clique_number(g).size <= 2; };
    for (int n = 1; n <= 7; ++n)
        enumerate_graphs(n, {}, [](const Graph & g) {
            CHECK(chi_p_triangle_free(g) == perfect_chromatic_number(g).value);
        }, {9, triangle_free});
}

TEST_CASE("line graphs of complete graphs")
{
    CHECK(chi_p_of_line_complete(3).value == 1);
    CHECK(chi_p_of_line_complete(4).value == 1);
    auto l5 = chi_p_of_line_complete(5);
    CHECK(l5.exact());
    CHECK(l5.value == oracle::chi_p(line_graph(complete(5))));
    CHECK_THROWS_AS(chi_p_of_line_complete(1), InputError);
    CHECK_THROWS_AS(chi_p_of_line_complete(8), CapExceeded);
}

TEST_CASE("niceness")
{
    CHECK(is_nice(cycle(5)).is_nice);
    CHECK(is_nice(antihole(7)).is_nice);
    CHECK(is_nice(complete(5)).is_nice);
    auto gr = is_nice(grotzsch());
    CHECK(! gr.is_nice);
    REQUIRE(gr.witness);
    // 4-critical: every proper induced subgraph is 3-colourable
    CHECK(*gr.witness == grotzsch().vertices());
    CHECK_THROWS_AS(is_nice(complete(12)), CapExceeded);

    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, {}, [](const Graph & g) {
            auto r = is_nice(g);
            CHECK(r.is_nice == oracle::nice(g));
            if (r.witness) {
                auto h = induced(g, *r.witness);
                CHECK(chromatic_number(h).value() - clique_number(h).size >= 2);
            }
        });
}

TEST_CASE("niceness is inherited by induced subgraphs")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 4), 0.5);
        auto s = g.empty_set();
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (rng() % 3 != 0)
                s.insert(v);
        if (is_nice(g).is_nice)
            CHECK(is_nice(induced(g, s)).is_nice);
    }
}
