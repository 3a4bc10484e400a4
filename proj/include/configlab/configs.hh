#pragma once

#include <configlab/hypergraph.hh>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace configlab
{
    class ConfigurationError :
        public HypergraphError
    {
        public:
            using HypergraphError::HypergraphError;
    };

    /// A set of edges together with its span. It witnesses an
    /// (s,k)-configuration when ell == k and span_size <= s.
    struct Configuration
    {
        EdgeIndexSet edges;
        int ell = 0;
        int span_size = 0;
        VertexSet vertices;

        [[nodiscard]] auto witnesses(int s, int k) const -> bool { return ell == k && span_size <= s; }
    };

    /// Raised when an input hypergraph contains a forbidden configuration.
    class NotFreeError :
        public ConfigurationError
    {
        private:
            Configuration _witness;
            int _s;

        public:
            NotFreeError(const std::string & what, Configuration witness, int s) :
                ConfigurationError(what),
                _witness(std::move(witness)),
                _s(s)
            {
            }

            [[nodiscard]] auto witness() const -> const Configuration & { return _witness; }
            [[nodiscard]] auto s() const -> int { return _s; }
    };

    [[nodiscard]] auto make_configuration(const Hypergraph & h, EdgeIndexSet edges) -> Configuration;

    [[nodiscard]] auto configuration_to_json(const Configuration & c) -> nlohmann::json;

    /// Some k edges spanning at most s vertices, if any exist. Exact.
    [[nodiscard]] auto find_configuration(const Hypergraph & h, int s, int k) -> std::optional<Configuration>;

    /// As find_configuration, restricted to configurations containing the given edge.
    [[nodiscard]] auto find_configuration_through(const Hypergraph & h, std::size_t edge, int s, int k) -> std::optional<Configuration>;

    /// The (s, k) pairs a g-free hypergraph must avoid: (k+2,k) and (l+1,l) for
    /// l in [2,k-1]; (3,2) is added for multi-hypergraphs when k == 2.
    [[nodiscard]] auto g_forbidden(int k, bool multi) -> std::vector<std::pair<int, int>>;

    struct FreenessReport
    {
        int k = 0;
        bool is_f_free = true;
        bool is_g_free = true;
        std::optional<Configuration> first_violation;
        int violation_s = 0;
    };

    [[nodiscard]] auto is_f_free(const Hypergraph & h, int k) -> bool;
    [[nodiscard]] auto is_g_free(const Hypergraph & h, int k) -> bool;
    [[nodiscard]] auto freeness_report(const Hypergraph & h, int k) -> FreenessReport;
    [[nodiscard]] auto freeness_report_to_json(const FreenessReport & r) -> nlohmann::json;

    /// First (l+1,l)-configuration for l = 2, 3, ..., k-1.
    [[nodiscard]] auto find_seed_configuration(const Hypergraph & h, int k) -> std::optional<Configuration>;

    /// True when no (l'+1,l')-configuration with ell < l' <= k-1 contains c.
    [[nodiscard]] auto is_k_maximal(const Hypergraph & h, const Configuration & c, int k) -> bool;

    /// Grows an (l+1,l)-configuration, 2 <= l <= k-1, to a k-maximal one
    /// containing it. h must be (k+2,k)-free; the seed is validated.
    [[nodiscard]] auto grow_k_maximal(const Hypergraph & h, const Configuration & seed, int k) -> Configuration;
}
