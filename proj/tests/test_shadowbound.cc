#include "support.hh"

#include <configlab/extremal.hh>
#include <configlab/shadowbound.hh>

#include <doctest.h>

using namespace configlab;
using test_support::fano;

TEST_CASE("intersection graph")
{
    Hypergraph pair{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 } } };
    auto g = build_intersection_graph(pair);
    CHECK(g.adjacency[0] == std::vector<std::size_t>{ 1 });
    CHECK(g.components.size() == 1);

    Hypergraph disjoint{ 6, { Edge{ 0, 1, 2 }, Edge{ 3, 4, 5 } } };
    CHECK(build_intersection_graph(disjoint).components.size() == 2);

    auto f = build_intersection_graph(fano());
    CHECK(f.components.size() == 7);
    for (auto & adj : f.adjacency)
        CHECK(adj.empty());
}

TEST_CASE("two-shadow")
{
    Hypergraph h{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 } } };
    CHECK(two_shadow(h, EdgeIndexSet::of(2, { 0 })).size() == 3);
    auto s = two_shadow(h, EdgeIndexSet::of(2, { 0, 1 }));
    CHECK(s.size() == 5);
    CHECK(s.count({ 0, 1 }) == 1);
    CHECK(s.count({ 2, 3 }) == 0);
}

TEST_CASE("component claims")
{
    SUBCASE("Fano at k=2")
    {
        auto r = verify_component_claims(fano(), 2);
        CHECK(r.components.size() == 7);
        for (auto & c : r.components) {
            CHECK(c.size == 1);
            CHECK(c.span == 3);
            CHECK(c.shadow == 3);
        }
        CHECK(r.total_shadow == 21);
        CHECK(r.shadows_disjoint);
    }
    SUBCASE("single edge")
    {
        for (int k = 2 ; k <= 5 ; ++k) {
            auto r = verify_component_claims(Hypergraph{ 3, { Edge{ 0, 1, 2 } } }, k);
            REQUIRE(r.components.size() == 1);
            CHECK(r.components[0].span == 3);
            CHECK(r.components[0].shadow == 3);
        }
    }
    SUBCASE("a two-edge component at k=4")
    {
        Hypergraph h{ 9, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 4, 5, 6 }, Edge{ 6, 7, 8 } } };
        auto r = verify_component_claims(h, 4);
        CHECK(r.components.size() == 3);
        CHECK(r.components[0].size == 2);
        CHECK(r.components[0].span == 4);
        CHECK(r.components[0].shadow == 5);
    }
    SUBCASE("precondition")
    {
        Hypergraph h{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 } } };
        CHECK_THROWS_AS((void) verify_component_claims(h, 2), NotFreeError);
        CHECK_THROWS_AS((void) edge_bound_check(h, 2), NotFreeError);
    }
    SUBCASE("generated g-free graphs")
    {
        for (std::uint64_t seed = 1 ; seed <= 20 ; ++seed) {
            int k = 2 + int(seed % 4);
            auto h = gen_random_free(16, k, SearchMode::g, seed);
            auto r = verify_component_claims(h, k);
            std::size_t edges = 0;
            for (auto & c : r.components) {
                CHECK(c.size <= std::size_t(k - 1));
                edges += c.size;
            }
            CHECK(edges == h.edge_count());
        }
    }
}

TEST_CASE("edge bound")
{
    auto b = edge_bound_check(fano(), 2);
    CHECK(b.bound == Rational(7));
    CHECK(b.holds);

    auto single = edge_bound_check(Hypergraph{ 3, { Edge{ 0, 1, 2 } } }, 2);
    CHECK(single.bound == Rational(1));
    CHECK(single.holds);

    auto empty = edge_bound_check(Hypergraph{ 5, { } }, 3);
    CHECK(empty.holds);
    CHECK(empty.bound == Rational(4));

    CHECK(squared_density_bound_holds(7, 7, 2));
    CHECK(! squared_density_bound_holds(9, 7, 2));

    auto j = component_report_to_json(verify_component_claims(fano(), 2), b);
    CHECK(j["bound_num"] == 7);
    CHECK(j["holds"] == true);
}
