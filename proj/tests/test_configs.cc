#include "support.hh"

#include <configlab/configs.hh>
#include <configlab/dense_search.hh>
#include <configlab/extremal.hh>

#include <doctest.h>

#include <map>
#include <set>

using namespace configlab;
using test_support::fano;

namespace
{
    auto edges_of(const Configuration & c) -> std::vector<std::size_t>
    {
        return c.edges.indices();
    }

    /// Pair-intersection and vertex-sharing connectivity of an edge subset.
    auto connected(const Hypergraph & h, const std::vector<std::size_t> & es, int min_shared) -> bool
    {
        std::vector<bool> seen(es.size(), false);
        std::vector<std::size_t> stack{ 0 };
        seen[0] = true;
        while (! stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0 ; y < es.size() ; ++y)
                if (! seen[y] && h.edge(es[x]).meet(h.edge(es[y]).as_set()) >= min_shared) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [] (bool b) { return b; });
    }
}

TEST_CASE("find_configuration examples")
{
    Hypergraph pair{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 } } };
    auto c = find_configuration(pair, 4, 2);
    REQUIRE(c);
    CHECK(edges_of(*c) == std::vector<std::size_t>{ 0, 1 });
    CHECK(c->span_size == 4);
    CHECK(c->witnesses(4, 2));

    CHECK(! find_configuration(fano(), 4, 2));

    Hypergraph k4{ 4, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 }, Edge{ 1, 2, 3 } } };
    auto t = find_configuration(k4, 5, 3);
    REQUIRE(t);
    CHECK(t->ell == 3);
    CHECK(t->span_size == 4);

    CHECK(! find_configuration(pair, 6, 3));
    CHECK_THROWS_AS((void) find_configuration(pair, 4, 0), ConfigurationError);
    CHECK_THROWS_AS((void) find_configuration(pair, 2, 2), ConfigurationError);
}

TEST_CASE("detector agrees with exhaustive enumeration")
{
    std::mt19937 rng{ 2024 };
    for (int round = 0 ; round < 300 ; ++round) {
        int n = 5 + int(rng() % 6);
        int m = 1 + int(rng() % std::min<unsigned>(12, unsigned(n * (n - 1) * (n - 2) / 6)));
        auto h = test_support::random_hypergraph(n, m, rng);
        auto t = test_support::triples(h);
        for (int k = 1 ; k <= 5 ; ++k)
            for (int s = 3 ; s <= std::min(n, 3 * k) ; ++s) {
                auto found = find_configuration(h, s, k);
                CHECK(found.has_value() == oracle::has_configuration(t, s, k));
                if (found)
                    CHECK(found->witnesses(s, k));
            }

        auto e = rng() % h.edge_count();
        for (int k = 2 ; k <= 4 ; ++k)
            for (int s = 4 ; s <= 7 ; ++s) {
                auto found = find_configuration_through(h, e, s, k);
                bool expected = oracle::for_each_subset(int(m), k, [&] (const std::vector<int> & idx) {
                        if (std::find(idx.begin(), idx.end(), int(e)) == idx.end())
                            return false;
                        std::uint64_t u = 0;
                        for (auto i : idx)
                            u |= oracle::mask(t[i]);
                        return std::popcount(u) <= s;
                    });
                CHECK(found.has_value() == expected);
                if (found) {
                    CHECK(found->edges.test(e));
                    CHECK(found->witnesses(s, k));
                }
            }
    }
}

TEST_CASE("multi-hypergraph configurations")
{
    Hypergraph h{ 6, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 3, 4, 5 } }, true };
    auto c = find_configuration(h, 3, 2);
    REQUIRE(c);
    CHECK(c->span_size == 3);
    CHECK(edges_of(*c) == std::vector<std::size_t>{ 0, 1 });
}

TEST_CASE("freeness reports")
{
    SUBCASE("Fano, k=2")
    {
        auto r = freeness_report(fano(), 2);
        CHECK(r.is_f_free);
        CHECK(r.is_g_free);
        CHECK(! r.first_violation);
    }
    SUBCASE("two edges sharing a pair are not a (3,2)-configuration")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 5, 6, 7 } } };
        CHECK(is_f_free(h, 3));
        CHECK(is_g_free(h, 3));
        CHECK(! is_f_free(h, 2));
    }
    SUBCASE("a repeated edge is a (3,2)-configuration")
    {
        for (int k = 3 ; k <= 5 ; ++k) {
            Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 5, 6, 7 } }, true };
            auto r = freeness_report(h, k);
            CHECK(r.is_f_free);
            CHECK(! r.is_g_free);
            REQUIRE(r.first_violation);
            CHECK(r.violation_s == 3);
            CHECK(r.first_violation->span_size == 3);
        }
    }
    SUBCASE("a (4,3)-configuration breaks g-freeness at k=4")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 }, Edge{ 5, 6, 7 } } };
        auto r = freeness_report(h, 4);
        CHECK(r.is_f_free);
        CHECK(! r.is_g_free);
        CHECK(r.violation_s == 4);
        CHECK(r.first_violation->ell == 3);
    }
    SUBCASE("g-free implies f-free")
    {
        std::mt19937 rng{ 5 };
        for (int round = 0 ; round < 100 ; ++round) {
            auto h = test_support::random_hypergraph(10, 6 + int(rng() % 8), rng);
            for (int k = 2 ; k <= 5 ; ++k)
                if (is_g_free(h, k))
                    CHECK(is_f_free(h, k));
        }
    }
    CHECK_THROWS_AS((void) freeness_report(fano(), 1), ConfigurationError);
}

TEST_CASE("connected-set oracle agrees with the detector")
{
    std::mt19937 rng{ 31 };
    int violated = 0;
    for (int round = 0 ; round < 300 ; ++round) {
        int k = 2 + int(rng() % 4);
        auto h = test_support::random_hypergraph(9 + int(rng() % 4), 4 + int(rng() % 9), rng);
        bool free = oracle::is_g_free_connected(test_support::triples(h), h.vertex_count(), k);
        CHECK(free == is_g_free(h, k));
        violated += ! free;
    }
    CHECK(violated > 0);
    CHECK(violated < 300);
}

TEST_CASE("inclusion-minimal configurations are connected")
{
    SUBCASE("regression: not necessarily pair-connected")
    {
        Hypergraph h{ 5, { Edge{ 0, 1, 2 }, Edge{ 0, 3, 4 }, Edge{ 1, 3, 4 }, Edge{ 2, 3, 4 } } };
        auto all = EdgeIndexSet::of(4, { 0, 1, 2, 3 });
        auto c = make_configuration(h, all);
        CHECK(c.witnesses(5, 4));
        // no proper subset of at least two edges is an (l+1,l)-configuration
        for (int l = 2 ; l <= 3 ; ++l)
            CHECK(! find_configuration(h, l + 1, l));
        CHECK(! connected(h, all.indices(), 2));
        CHECK(connected(h, all.indices(), 1));
    }
    SUBCASE("random small edge sets")
    {
        std::mt19937 rng{ 99 };
        int checked = 0;
        for (int round = 0 ; round < 400 ; ++round) {
            auto h = test_support::random_hypergraph(7, 3 + int(rng() % 4), rng);
            int l = int(h.edge_count());
            auto all = h.all_edges();
            if (span(h, all).count() > l + 1)
                continue;
            bool minimal = true;
            for (int sub = 2 ; sub < l ; ++sub)
                if (find_configuration(h, sub + 1, sub))
                    minimal = false;
            if (! minimal)
                continue;
            ++checked;
            std::vector<std::size_t> es(l);
            for (int i = 0 ; i < l ; ++i)
                es[i] = std::size_t(i);
            CHECK(connected(h, es, 1));
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("seeds and growth to k-maximality")
{
    SUBCASE("seed with l = k-1 is already maximal")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 5, 6, 7 } }, true };
        auto seed = find_seed_configuration(h, 3);
        REQUIRE(seed);
        CHECK(seed->ell == 2);
        CHECK(is_k_maximal(h, *seed, 3));
        auto grown = grow_k_maximal(h, *seed, 3);
        CHECK(grown.edges == seed->edges);
    }
    SUBCASE("grows to three triples on four points")
    {
        Hypergraph h{ 10, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 }, Edge{ 5, 6, 7 }, Edge{ 7, 8, 9 } }, true };
        auto seed = make_configuration(h, EdgeIndexSet::of(5, { 0, 1 }));
        // {012,013} spans 4 > 3: not an (l+1,l)-configuration with l = 2
        CHECK_THROWS_AS((void) grow_k_maximal(h, seed, 4), ConfigurationError);

        Hypergraph m{ 10, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 5, 6, 7 }, Edge{ 7, 8, 9 } }, true };
        auto s2 = make_configuration(m, EdgeIndexSet::of(5, { 0, 1 }));
        REQUIRE(s2.witnesses(3, 2));
        auto grown = grow_k_maximal(m, s2, 4);
        CHECK(edges_of(grown) == std::vector<std::size_t>{ 0, 1, 2 });
        CHECK(grown.witnesses(4, 3));
        CHECK(is_k_maximal(m, grown, 4));
    }
    SUBCASE("fixed point on a maximal seed")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 0, 2, 3 }, Edge{ 5, 6, 7 } } };
        auto seed = find_seed_configuration(h, 4);
        REQUIRE(seed);
        CHECK(seed->ell == 3);
        auto grown = grow_k_maximal(h, *seed, 4);
        CHECK(grown.edges == seed->edges);
    }
    SUBCASE("the invalid k=3 seed {012,013} is rejected")
    {
        Hypergraph h{ 8, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 }, Edge{ 5, 6, 7 } } };
        auto seed = make_configuration(h, EdgeIndexSet::of(3, { 0, 1 }));
        CHECK_THROWS_AS((void) grow_k_maximal(h, seed, 3), ConfigurationError);
        CHECK(! find_seed_configuration(h, 3));
    }
    SUBCASE("grown configurations are maximal and contain the seed")
    {
        std::mt19937 rng{ 17 };
        int grown_count = 0;
        for (int round = 0 ; round < 200 ; ++round) {
            int k = 4 + int(rng() % 2);
            auto h = gen_planted_free(8 + round % 2, k, std::uint64_t(round), 2);
            auto seed = find_seed_configuration(h, k);
            if (! seed)
                continue;
            auto grown = grow_k_maximal(h, *seed, k);
            ++grown_count;
            CHECK(seed->edges.is_subset_of(grown.edges));
            CHECK(grown.span_size <= grown.ell + 1);
            CHECK(grown.ell <= k - 1);
            CHECK(is_k_maximal(h, grown, k));

            // exhaustive: no edge set strictly containing the result is an (l'+1,l')-configuration, l' <= k-1
            auto t = test_support::triples(h);
            int m = int(t.size());
            for (int mask = 0 ; mask < (1 << m) ; ++mask) {
                int size = std::popcount(unsigned(mask));
                if (size <= grown.ell || size > k - 1)
                    continue;
                bool superset = true;
                for (auto i : grown.edges.indices())
                    if (! (mask & (1 << i)))
                        superset = false;
                if (! superset)
                    continue;
                std::uint64_t u = 0;
                for (int i = 0 ; i < m ; ++i)
                    if (mask & (1 << i))
                        u |= oracle::mask(t[i]);
                CHECK(std::popcount(u) > size + 1);
            }
        }
        CHECK(grown_count > 0);
    }
}

TEST_CASE("dense set search counts edges inside the found set")
{
    auto f = fano();
    DenseSetSearch search{ f };
    auto w = search.find(VertexSet{ }, 7, 7);
    REQUIRE(w);
    CHECK(f.edges_inside(*w) == 7);
    CHECK(! search.find(VertexSet{ }, 6, 5));
    CHECK(search.find(VertexSet{ }, 6, 4));
}
