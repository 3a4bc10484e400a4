#pragma once

#include <configlab/configs.hh>
#include <configlab/hypergraph.hh>

#include <boost/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace configlab
{
    using Rational = boost::rational<long long>;

    class SparsifierError :
        public ConfigurationError
    {
        public:
            using ConfigurationError::ConfigurationError;
    };

    /// Edges meeting V(S), by how many of their vertices lie in V(S).
    struct EdgePartition
    {
        EdgeIndexSet meets_one;
        EdgeIndexSet meets_two;
        EdgeIndexSet inside;
    };

    /// Graph on V(F) \ V(S) whose edges are the outside pairs of edges meeting
    /// V(S) in exactly one vertex.
    struct LinkGraph
    {
        VertexSet vertices;
        std::vector<std::pair<Vertex, Vertex>> edges;
        bool is_forest = true;
        int component_count = 0;
        int max_component_size = 0;
    };

    struct StructuralVerdicts
    {
        bool inside_at_most_k_minus_1 = false;
        bool none_meet_in_two = false;
        bool outside_pairs_distinct = false;
        bool link_is_small_forest = false;

        [[nodiscard]] auto all() const -> bool
        {
            return inside_at_most_k_minus_1 && none_meet_in_two && outside_pairs_distinct && link_is_small_forest;
        }
    };

    struct StructuralReport
    {
        EdgePartition partition;
        LinkGraph link;
        StructuralVerdicts verdicts;
    };

    /// Partition, link graph and the four structural verdicts for a k-maximal S.
    /// Throws ConfigurationError when S is not k-maximal.
    [[nodiscard]] auto structural_checks(const Hypergraph & h, const Configuration & s, int k) -> StructuralReport;

    /// Upper bound on edges lost by deleting V(S): (1-1/k)(v(F)-v(S)) + (k-1).
    [[nodiscard]] auto step_loss_bound(long long v, long long v_s, int k) -> Rational;

    /// Upper bound on e(F)-e(F'): (1/6)(1-1/k)(v-v')(v+v'+2k).
    [[nodiscard]] auto aggregate_loss_bound(long long v, long long v_prime, int k) -> Rational;

    struct ExtractionStep
    {
        int ell = 0;
        std::vector<std::size_t> configuration_edges;
        std::vector<Vertex> configuration_vertices;
        int vertices_before = 0;
        std::size_t edges_before = 0;
        std::size_t meets_one = 0, meets_two = 0, inside = 0;
        std::size_t link_edges = 0;
        bool link_is_forest = true;
        int link_components = 0;
        int link_max_component = 0;
        std::size_t loss = 0;
        Rational loss_bound;
        StructuralVerdicts verdicts;
    };

    /// Every step deleted the span of a k-maximal configuration; labels in
    /// steps refer to the input hypergraph.
    struct ExtractionTrace
    {
        int k = 0;
        std::vector<ExtractionStep> steps;
        int initial_vertices = 0;
        std::size_t initial_edges = 0;
        int final_vertices = 0;
        std::size_t final_edges = 0;
        Rational aggregate_bound;

        [[nodiscard]] auto total_loss() const -> std::size_t { return initial_edges - final_edges; }
        [[nodiscard]] auto aggregate_holds() const -> bool { return Rational(static_cast<long long>(total_loss())) <= aggregate_bound; }
    };

    struct Extraction
    {
        Hypergraph result;
        std::vector<Vertex> original_vertex;
        std::vector<std::size_t> original_edge;
        ExtractionTrace trace;
    };

    /// Repeatedly deletes the span of a k-maximal (l+1,l)-configuration until
    /// none is left. The input must be (k+2,k)-free (NotFreeError otherwise);
    /// any violated structural conclusion or loss bound raises SparsifierError.
    [[nodiscard]] auto extract_free_subgraph(const Hypergraph & h, int k) -> Extraction;

    struct DenseCertificate
    {
        bool hypotheses_met = false;
        long long v = 0, e = 0, v_prime = 0, e_prime = 0;
        // v' >= v / sqrt(4k)  <=>  4k v'^2 >= v^2
        long long size_lhs = 0, size_rhs = 0;
        // e'/v'^2 >= e/v^2  <=>  e' v^2 >= e v'^2
        long long density_lhs = 0, density_rhs = 0;
        bool size_holds = false;
        bool density_holds = false;
    };

    [[nodiscard]] auto dense_hypotheses_met(const Hypergraph & h, int k) -> bool;

    /// Runs the extraction and, when v >= 8k^2 and e >= (1/6)(1-1/(2k))v^2,
    /// asserts v' >= v/sqrt(4k) and e'/v'^2 >= e/v^2 (SparsifierError if either fails).
    [[nodiscard]] auto dense_extract_with_certificate(const Hypergraph & h, int k) -> std::pair<Extraction, DenseCertificate>;

    [[nodiscard]] auto step_to_json(const ExtractionStep & step, std::size_t index) -> nlohmann::json;
    [[nodiscard]] auto trace_summary_json(const ExtractionTrace & trace) -> nlohmann::json;
    [[nodiscard]] auto certificate_to_json(const DenseCertificate & c) -> nlohmann::json;

    /// One JSON object per line, one line per step.
    [[nodiscard]] auto trace_to_json_lines(const ExtractionTrace & trace) -> std::string;
}
