#pragma once

#include <configlab/bit_sets.hh>

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace configlab
{
    class HypergraphError :
        public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A 3-element edge, vertices strictly increasing.
    class Edge
    {
        private:
            std::array<Vertex, 3> _v;

        public:
            /// Sorts its arguments; throws if any two coincide.
            Edge(Vertex a, Vertex b, Vertex c);

            [[nodiscard]] auto operator[] (int i) const -> Vertex { return _v[i]; }
            [[nodiscard]] auto vertices() const -> const std::array<Vertex, 3> & { return _v; }
            [[nodiscard]] auto as_set() const -> VertexSet { return VertexSet::of({ _v[0], _v[1], _v[2] }); }
            [[nodiscard]] auto contains(Vertex v) const -> bool { return _v[0] == v || _v[1] == v || _v[2] == v; }

            /// Number of this edge's vertices lying in vs.
            [[nodiscard]] auto meet(const VertexSet & vs) const -> int
            {
                return int(vs.test(_v[0])) + int(vs.test(_v[1])) + int(vs.test(_v[2]));
            }

            [[nodiscard]] auto operator<=> (const Edge &) const = default;
    };

    /// A 3-uniform hypergraph on vertices 0..n-1, optionally with repeated edges.
    ///
    /// Values are immutable after construction. Edge order is the order given;
    /// canonicalized() returns the sorted form used for file output.
    class Hypergraph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            bool _multi = false;
            std::vector<std::vector<std::size_t>> _incidence;

        public:
            Hypergraph() = default;
            Hypergraph(int n, std::vector<Edge> edges, bool multi_allowed = false);

            [[nodiscard]] auto vertex_count() const -> int { return _n; }
            [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }
            [[nodiscard]] auto multi_allowed() const -> bool { return _multi; }
            [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }
            [[nodiscard]] auto edge(std::size_t i) const -> const Edge & { return _edges.at(i); }

            /// Indices of edges containing v, ascending.
            [[nodiscard]] auto incident(Vertex v) const -> const std::vector<std::size_t> & { return _incidence.at(v); }

            [[nodiscard]] auto degree(Vertex v) const -> std::size_t { return _incidence.at(v).size(); }

            [[nodiscard]] auto incidence_lists() const -> const std::vector<std::vector<std::size_t>> & { return _incidence; }

            [[nodiscard]] auto all_vertices() const -> VertexSet { return VertexSet::range(_n); }

            [[nodiscard]] auto all_edges() const -> EdgeIndexSet;

            /// Number of edges with all three vertices in vs.
            [[nodiscard]] auto edges_inside(const VertexSet & vs) const -> std::size_t;

            /// Number of edges meeting vs in at least one vertex.
            [[nodiscard]] auto edges_meeting(const VertexSet & vs) const -> std::size_t;

            [[nodiscard]] auto canonicalized() const -> Hypergraph;

            /// The sub-hypergraph on the same vertex set keeping only the given edges.
            [[nodiscard]] auto restricted_to(const EdgeIndexSet & es) const -> Hypergraph;

            [[nodiscard]] friend auto operator== (const Hypergraph & a, const Hypergraph & b) -> bool
            {
                return a._n == b._n && a._multi == b._multi && a._edges == b._edges;
            }
    };

    /// The vertices covered by the selected edges.
    [[nodiscard]] auto span(const Hypergraph & h, const EdgeIndexSet & es) -> VertexSet;

    /// Result of deleting a vertex set: the surviving hypergraph with vertices
    /// relabelled densely, plus maps back to the parent's labels.
    struct VertexDeletion
    {
        Hypergraph graph;
        std::vector<Vertex> original_vertex;
        std::vector<std::size_t> original_edge;
    };

    /// F minus vs: every vertex outside vs, and exactly the edges disjoint from vs.
    [[nodiscard]] auto delete_vertices(const Hypergraph & h, const VertexSet & vs) -> VertexDeletion;

    [[nodiscard]] auto binomial2(long long v) -> long long;
}
