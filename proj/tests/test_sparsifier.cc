#include "support.hh"

#include <configlab/extremal.hh>
#include <configlab/sparsifier.hh>

#include <doctest.h>

using namespace configlab;
using test_support::fano;

TEST_CASE("structural checks")
{
    SUBCASE("S holds every edge near it")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 }, Edge{ 5, 6, 7 } } };
        auto s = make_configuration(h, EdgeIndexSet::of(4, { 0, 1, 2 }));
        auto r = structural_checks(h, s, 4);
        CHECK(r.partition.inside.count() == 3);
        CHECK(r.partition.meets_two.empty());
        CHECK(r.partition.meets_one.empty());
        CHECK(r.link.edges.empty());
        CHECK(r.link.is_forest);
        CHECK(r.verdicts.all());
    }
    SUBCASE("one edge meeting S once gives a one-edge link")
    {
        Hypergraph h{ 9, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 0, 4, 5 }, Edge{ 6, 7, 8 } }, true };
        REQUIRE(is_f_free(h, 4));
        auto s = make_configuration(h, EdgeIndexSet::of(4, { 0, 1 }));
        auto r = structural_checks(h, s, 4);
        CHECK(r.partition.meets_one.indices() == std::vector<std::size_t>{ 2 });
        REQUIRE(r.link.edges.size() == 1);
        CHECK(r.link.edges[0] == std::pair<Vertex, Vertex>{ 4, 5 });
        CHECK(r.link.max_component_size == 2);
        CHECK(r.verdicts.link_is_small_forest);
        CHECK(r.verdicts.all());
    }
    SUBCASE("S spanning everything")
    {
        Hypergraph h{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 } } };
        auto s = make_configuration(h, h.all_edges());
        auto r = structural_checks(h, s, 4);
        CHECK(r.link.edges.empty());
        CHECK(r.link.component_count == 0);
        CHECK(r.verdicts.all());
    }
    SUBCASE("a non-maximal S is rejected")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 5, 6, 7 } }, true };
        auto s = make_configuration(h, EdgeIndexSet::of(4, { 0, 1 }));
        CHECK_THROWS_AS((void) structural_checks(h, s, 4), ConfigurationError);
    }
}

TEST_CASE("loss bounds in exact arithmetic")
{
    CHECK(step_loss_bound(7, 4, 3) == Rational(4));
    CHECK(step_loss_bound(8, 4, 4) == Rational(6));
    CHECK(aggregate_loss_bound(7, 3, 3) == Rational(64, 9));
    CHECK(aggregate_loss_bound(8, 4, 4) == Rational(10));
    CHECK(aggregate_loss_bound(10, 10, 5) == Rational(0));
}

TEST_CASE("extraction")
{
    SUBCASE("g-free input is returned unchanged")
    {
        auto e = extract_free_subgraph(fano(), 2);
        CHECK(e.result == fano());
        CHECK(e.trace.steps.empty());
        CHECK(trace_to_json_lines(e.trace).empty());
    }
    SUBCASE("one step removing three triples on four points")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 }, Edge{ 5, 6, 7 } } };
        auto e = extract_free_subgraph(h, 4);
        REQUIRE(e.trace.steps.size() == 1);
        auto & step = e.trace.steps[0];
        CHECK(step.ell == 3);
        CHECK(step.configuration_vertices == std::vector<Vertex>{ 0, 1, 2, 3 });
        CHECK(step.loss == 3);
        CHECK(step.loss_bound == Rational(6));
        CHECK(e.trace.aggregate_bound == Rational(10));
        CHECK(e.trace.aggregate_holds());
        CHECK(e.result.vertex_count() == 4);
        REQUIRE(e.result.edge_count() == 1);
        CHECK(e.result.edge(0) == Edge{ 1, 2, 3 });
        CHECK(e.original_vertex == std::vector<Vertex>{ 4, 5, 6, 7 });
        CHECK(e.original_edge == std::vector<std::size_t>{ 3 });
    }
    SUBCASE("a doubled edge at k=3")
    {
        Hypergraph h{ 6, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 3, 4, 5 } }, true };
        auto e = extract_free_subgraph(h, 3);
        REQUIRE(e.trace.steps.size() == 1);
        CHECK(e.trace.steps[0].loss == 2);
        CHECK(e.trace.steps[0].loss_bound == Rational(4));
        CHECK(is_g_free(e.result, 3));
        CHECK(e.result.edge_count() == 1);
    }
    SUBCASE("k=2 is the identity on free input")
    {
        for (std::uint64_t seed = 1 ; seed <= 5 ; ++seed) {
            auto h = gen_random_free(12, 2, SearchMode::f, seed);
            CHECK(extract_free_subgraph(h, 2).result == h);
        }
    }
    SUBCASE("non-free input")
    {
        Hypergraph h{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 } } };
        CHECK_THROWS_AS((void) extract_free_subgraph(h, 2), NotFreeError);
        try {
            (void) extract_free_subgraph(h, 2);
        }
        catch (const NotFreeError & e) {
            CHECK(e.witness().edges.indices() == std::vector<std::size_t>{ 0, 1 });
        }
    }
    SUBCASE("idempotent, sound and within bounds on planted inputs")
    {
        int with_steps = 0;
        for (std::uint64_t seed = 1 ; seed <= 30 ; ++seed) {
            int k = 3 + int(seed % 3);
            auto h = gen_planted_free(14 + int(seed % 7), k, seed, 3);
            auto e = extract_free_subgraph(h, k);
            with_steps += ! e.trace.steps.empty();
            CHECK(is_g_free(e.result, k));
            CHECK(e.trace.steps.size() <= std::size_t(h.vertex_count() / 3));
            for (auto & step : e.trace.steps) {
                CHECK(step.verdicts.all());
                CHECK(Rational(static_cast<long long>(step.loss)) <= step.loss_bound);
            }
            CHECK(e.trace.aggregate_holds());
            CHECK(extract_free_subgraph(e.result, k).result == e.result);

            // labels map back to the input
            for (std::size_t i = 0 ; i < e.result.edge_count() ; ++i) {
                auto & orig = h.edge(e.original_edge[i]);
                auto & now = e.result.edge(i);
                for (int j = 0 ; j < 3 ; ++j)
                    CHECK(e.original_vertex[now[j]] == orig[j]);
            }
        }
        CHECK(with_steps > 0);
    }
}

TEST_CASE("dense certificate")
{
    SUBCASE("hypotheses unmet")
    {
        auto [e, cert] = dense_extract_with_certificate(fano(), 2);
        CHECK(! cert.hypotheses_met);
        CHECK(certificate_to_json(cert).contains("note"));
    }
    SUBCASE("Steiner triple system on 33 points at k=2")
    {
        auto sts = bose_steiner_triple_system(33);
        CHECK(sts.edge_count() == 33 * 32 / 6);
        auto [e, cert] = dense_extract_with_certificate(sts, 2);
        CHECK(cert.hypotheses_met);
        CHECK(cert.size_holds);
        CHECK(cert.density_holds);
        CHECK(e.result == sts);
    }
}
