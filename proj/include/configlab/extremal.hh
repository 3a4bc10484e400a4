#pragma once

#include <configlab/hypergraph.hh>
#include <configlab/sparsifier.hh>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace configlab
{
    enum class SearchMode
    {
        f,
        g
    };

    [[nodiscard]] auto mode_name(SearchMode m) -> std::string;
    [[nodiscard]] auto parse_mode(const std::string & s) -> SearchMode;

    struct SearchConfig
    {
        /// 0 means unlimited.
        unsigned long long max_nodes = 0;
        /// Seconds; 0 means unlimited.
        double time_budget = 0.0;
        bool symmetry_pruning = true;
        /// Seeds the incumbent; must be free for the searched parameters.
        std::optional<Hypergraph> initial_witness;
        unsigned threads = 1;
        int max_n = 10;
    };

    struct SearchStats
    {
        unsigned long long nodes = 0;
        unsigned long long bound_prunes = 0;
        unsigned long long duplicates = 0;
        double seconds = 0.0;
    };

    /// An extremal value with a witness. When exact is false the search ran
    /// out of budget and value is only a lower bound.
    struct SearchRecord
    {
        int n = 0, s = 0, k = 0;
        SearchMode mode = SearchMode::f;
        std::size_t value = 0;
        bool exact = false;
        Hypergraph witness;
        SearchStats stats;
    };

    /// The (s,k) pairs a hypergraph must avoid in the given mode.
    [[nodiscard]] auto forbidden_pairs(SearchMode mode, int s, int k) -> std::vector<std::pair<int, int>>;

    /// Maximum number of edges of an (s,k)-free 3-uniform hypergraph on n vertices.
    [[nodiscard]] auto compute_f(int n, int s, int k, const SearchConfig & cfg = { }) -> SearchRecord;

    /// As compute_f with s = k+2, additionally (l+1,l)-free for l in [2,k-1].
    [[nodiscard]] auto compute_g(int n, int k, const SearchConfig & cfg = { }) -> SearchRecord;

    [[nodiscard]] auto search_record_to_json(const SearchRecord & r) -> nlohmann::json;
    [[nodiscard]] auto search_record_from_json(const nlohmann::json & j) -> SearchRecord;

    /// Every triple of [n] in lexicographic order.
    [[nodiscard]] auto all_triples(int n) -> std::vector<Edge>;

    /// Random greedy: shuffles all triples by a seeded generator and keeps each
    /// one that leaves the hypergraph free in the given mode.
    [[nodiscard]] auto gen_random_free(int n, int k, SearchMode mode, std::uint64_t seed) -> Hypergraph;

    /// (k+2,k)-free hypergraph with planted (l+1,l)-configurations, completed
    /// greedily. For k = 3 the plants are doubled edges, so the result is a
    /// multi-hypergraph; for k >= 4 they are l triples on l+1 vertices.
    [[nodiscard]] auto gen_planted_free(int n, int k, std::uint64_t seed, int clusters) -> Hypergraph;

    /// Bose construction of a Steiner triple system on n = 3m vertices, m odd.
    [[nodiscard]] auto bose_steiner_triple_system(int n) -> Hypergraph;

    struct RatioRow
    {
        int n = 0;
        std::size_t value = 0;
        bool exact = false;
        Rational ratio;
    };

    struct RatioTable
    {
        int k = 0;
        SearchMode mode = SearchMode::f;
        std::vector<RatioRow> rows;
        /// Known limit of value/n^2 as n grows, where one is known (k = 2, 3, 4).
        std::optional<Rational> reference_limit;
    };

    [[nodiscard]] auto reference_limit(int k) -> std::optional<Rational>;

    class ResultsCache;

    [[nodiscard]] auto ratio_table(int k, int n_from, int n_to, SearchMode mode, const SearchConfig & cfg = { },
            ResultsCache * cache = nullptr) -> RatioTable;

    [[nodiscard]] auto ratio_table_csv(const RatioTable & t) -> std::string;
    [[nodiscard]] auto ratio_table_json(const RatioTable & t) -> nlohmann::json;

    /// JSON file of search records keyed by mode, n, s and k.
    class ResultsCache
    {
        private:
            std::filesystem::path _path;
            nlohmann::json _data = nlohmann::json::object();

        public:
            explicit ResultsCache(std::filesystem::path path);

            /// CONFIGLAB_CACHE if set, otherwise configlab_cache.json in the working directory.
            [[nodiscard]] static auto default_path() -> std::filesystem::path;

            [[nodiscard]] static auto key(SearchMode mode, int n, int s, int k) -> std::string;

            [[nodiscard]] auto lookup(SearchMode mode, int n, int s, int k) const -> std::optional<SearchRecord>;
            auto store(const SearchRecord & r) -> void;
            auto save() const -> void;
    };
}
