#pragma once

#include <configlab/hypergraph.hh>
#include <configlab/sparsifier.hh>

#include <json.hpp>

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace configlab
{
    /// Graph on the edges of F, two edges adjacent when they share at least two vertices.
    struct IntersectionGraph
    {
        std::vector<std::vector<std::size_t>> adjacency;
        std::vector<EdgeIndexSet> components;
        std::vector<std::size_t> component_of;
    };

    using Shadow2 = std::set<std::pair<Vertex, Vertex>>;

    [[nodiscard]] auto build_intersection_graph(const Hypergraph & h) -> IntersectionGraph;

    /// Vertex pairs covered by some edge of ys.
    [[nodiscard]] auto two_shadow(const Hypergraph & h, const EdgeIndexSet & ys) -> Shadow2;

    struct ComponentClaim
    {
        std::size_t size = 0;
        int span = 0;
        std::size_t shadow = 0;
    };

    struct ComponentReport
    {
        int k = 0;
        std::vector<ComponentClaim> components;
        std::size_t total_shadow = 0;
        bool shadows_disjoint = false;
    };

    /// For each component T of the intersection graph of a g-free h, checks
    /// v(T) <= k-1, |span| = v(T)+2, |shadow| = 2v(T)+1 and pairwise disjoint
    /// shadows. Throws NotFreeError when h is not g-free and SparsifierError
    /// when a claim fails.
    [[nodiscard]] auto verify_component_claims(const Hypergraph & h, int k) -> ComponentReport;

    struct EdgeBound
    {
        Rational bound;
        bool holds = false;
    };

    /// e(h) <= (k-1)/(2k-1) * C(v,2), exact. Throws NotFreeError when h is not g-free.
    [[nodiscard]] auto edge_bound_check(const Hypergraph & h, int k) -> EdgeBound;

    /// e <= (k-1)/(4k-2) * v^2, by cross-multiplication.
    [[nodiscard]] auto squared_density_bound_holds(long long e, long long v, int k) -> bool;

    [[nodiscard]] auto component_report_to_json(const ComponentReport & r, const EdgeBound & b) -> nlohmann::json;
}
