#include "support.hh"

#include <configlab/canonical.hh>
#include <configlab/configs.hh>
#include <configlab/extremal.hh>

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace configlab;
using test_support::fano;

TEST_CASE("small extremal values")
{
    auto r = compute_f(3, 4, 2);
    CHECK(r.value == 1);
    CHECK(r.exact);

    auto seven = compute_f(7, 4, 2);
    CHECK(seven.value == 7);
    CHECK(seven.exact);
    CHECK(canonical_labelling(7, seven.witness.edges()).form == canonical_labelling(7, fano().edges()).form);

    for (int n = 3 ; n <= 6 ; ++n) {
        SearchConfig plain;
        plain.symmetry_pruning = false;
        CHECK(compute_f(n, 5, 3, plain).value == compute_f(n, 5, 3).value);
    }
}

TEST_CASE("search parameters and budgets")
{
    CHECK_THROWS_AS((void) compute_f(2, 4, 2), ConfigurationError);
    CHECK_THROWS_AS((void) compute_f(11, 4, 2), ConfigurationError);
    CHECK_THROWS_AS((void) compute_f(6, 4, 1), ConfigurationError);

    SearchConfig tiny;
    tiny.max_nodes = 1;
    auto r = compute_f(9, 5, 3, tiny);
    CHECK(! r.exact);
    CHECK(r.witness.edge_count() == r.value);
    CHECK(! find_configuration(r.witness, 5, 3));

    SearchConfig seeded;
    seeded.initial_witness = fano();
    CHECK(compute_f(7, 4, 2, seeded).value == 7);
    seeded.initial_witness = Hypergraph{ 7, { Edge{ 0, 1, 2 }, Edge{ 0, 1, 3 } } };
    CHECK_THROWS_AS((void) compute_f(7, 4, 2, seeded), ConfigurationError);

    SearchConfig threaded;
    threaded.threads = 3;
    CHECK(compute_g(8, 3, threaded).value == compute_g(8, 3).value);
}

TEST_CASE("generators")
{
    SUBCASE("random greedy is free, maximal and deterministic")
    {
        auto h = gen_random_free(6, 2, SearchMode::f, 42);
        CHECK(is_f_free(h, 2));
        for (auto & t : all_triples(6)) {
            auto edges = h.edges();
            if (std::find(edges.begin(), edges.end(), t) != edges.end())
                continue;
            edges.push_back(t);
            CHECK(! is_f_free(Hypergraph{ 6, edges }, 2));
        }
        CHECK(gen_random_free(6, 2, SearchMode::f, 42) == h);
        CHECK(gen_random_free(20, 3, SearchMode::g, 1) == gen_random_free(20, 3, SearchMode::g, 1));
        CHECK(is_g_free(gen_random_free(20, 3, SearchMode::g, 1), 3));
    }
    SUBCASE("planted corpora are f-free and carry configurations")
    {
        int with_seed = 0;
        for (std::uint64_t seed = 1 ; seed <= 12 ; ++seed) {
            int k = 3 + int(seed % 3);
            auto h = gen_planted_free(15, k, seed, 3);
            CHECK(is_f_free(h, k));
            CHECK(h.multi_allowed() == (k == 3));
            with_seed += ! is_g_free(h, k);
        }
        CHECK(with_seed > 0);
    }
    SUBCASE("Bose Steiner triple systems cover every pair once")
    {
        for (int n : { 9, 15, 21 }) {
            auto h = bose_steiner_triple_system(n);
            CHECK(h.edge_count() == std::size_t(n * (n - 1) / 6));
            std::set<std::pair<int, int>> pairs;
            for (auto & e : h.edges()) {
                pairs.insert({ e[0], e[1] });
                pairs.insert({ e[0], e[2] });
                pairs.insert({ e[1], e[2] });
            }
            CHECK(pairs.size() == std::size_t(n * (n - 1) / 2));
        }
        CHECK_THROWS_AS((void) bose_steiner_triple_system(12), ConfigurationError);
    }
}

TEST_CASE("ratio table and cache")
{
    auto path = std::filesystem::temp_directory_path() / "configlab-cache-test.json";
    std::filesystem::remove(path);
    {
        ResultsCache cache{ path };
        auto t = ratio_table(2, 3, 7, SearchMode::f, { }, &cache);
        REQUIRE(t.rows.size() == 5);
        CHECK(t.rows.back().value == 7);
        CHECK(t.rows.back().ratio == Rational(1, 7));
        CHECK(t.reference_limit == Rational(1, 6));
        auto csv = ratio_table_csv(t);
        CHECK(csv.find("1/6") != std::string::npos);
        CHECK(csv.find("7,7,true,1/7") != std::string::npos);
        CHECK(ratio_table_json(t)["rows"].size() == 5);
        cache.save();
    }
    ResultsCache reopened{ path };
    auto r = reopened.lookup(SearchMode::f, 7, 4, 2);
    REQUIRE(r);
    CHECK(r->value == 7);
    CHECK(r->exact);
    CHECK(is_f_free(r->witness, 2));
    CHECK(! reopened.lookup(SearchMode::g, 7, 4, 2));
    CHECK(search_record_from_json(search_record_to_json(*r)).witness == r->witness);
    CHECK(! reference_limit(5));
    std::filesystem::remove(path);
}
