#include <configlab/hypergraph.hh>

#include <algorithm>
#include <set>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace configlab
{
    Edge::Edge(Vertex a, Vertex b, Vertex c) :
        _v{ a, b, c }
    {
        std::sort(_v.begin(), _v.end());
        if (_v[0] == _v[1] || _v[1] == _v[2])
            throw HypergraphError{ "edge has repeated vertex: " + to_string(a) + " " + to_string(b) + " " + to_string(c) };
    }

    Hypergraph::Hypergraph(int n, vector<Edge> edges, bool multi_allowed) :
        _n(n),
        _edges(std::move(edges)),
        _multi(multi_allowed)
    {
        if (n < 0)
            throw HypergraphError{ "negative vertex count" };
        if (n > max_vertices)
            throw HypergraphError{ "vertex count " + to_string(n) + " exceeds the supported maximum of " + to_string(max_vertices) };

        _incidence.resize(n);
        for (size_t i = 0 ; i < _edges.size() ; ++i) {
            for (auto v : _edges[i].vertices()) {
                if (v < 0 || v >= n)
                    throw HypergraphError{ "edge " + to_string(i) + " has vertex " + to_string(v) + " outside [0," + to_string(n) + ")" };
                _incidence[v].push_back(i);
            }
        }

        if (! _multi) {
            auto sorted = _edges;
            std::sort(sorted.begin(), sorted.end());
            auto dup = std::adjacent_find(sorted.begin(), sorted.end());
            if (dup != sorted.end())
                throw HypergraphError{ "duplicate edge " + to_string((*dup)[0]) + " " + to_string((*dup)[1]) + " " + to_string((*dup)[2])
                    + " in a hypergraph without multi-edges" };
        }
    }

    auto Hypergraph::all_edges() const -> EdgeIndexSet
    {
        EdgeIndexSet result(_edges.size());
        for (size_t i = 0 ; i < _edges.size() ; ++i)
            result.set(i);
        return result;
    }

    auto Hypergraph::edges_inside(const VertexSet & vs) const -> size_t
    {
        size_t result = 0;
        for (auto & e : _edges)
            if (e.meet(vs) == 3)
                ++result;
        return result;
    }

    auto Hypergraph::edges_meeting(const VertexSet & vs) const -> size_t
    {
        size_t result = 0;
        for (auto & e : _edges)
            if (e.meet(vs) > 0)
                ++result;
        return result;
    }

    auto Hypergraph::canonicalized() const -> Hypergraph
    {
        auto sorted = _edges;
        std::sort(sorted.begin(), sorted.end());
        return Hypergraph{ _n, std::move(sorted), _multi };
    }

    auto Hypergraph::restricted_to(const EdgeIndexSet & es) const -> Hypergraph
    {
        vector<Edge> kept;
        for (auto i : es.indices())
            kept.push_back(_edges.at(i));
        return Hypergraph{ _n, std::move(kept), _multi };
    }

    auto span(const Hypergraph & h, const EdgeIndexSet & es) -> VertexSet
    {
        VertexSet result;
        for (auto i : es.indices()) {
            if (i >= h.edge_count())
                throw HypergraphError{ "edge index " + to_string(i) + " out of range (" + to_string(h.edge_count()) + " edges)" };
            result |= h.edge(i).as_set();
        }
        return result;
    }

    auto delete_vertices(const Hypergraph & h, const VertexSet & vs) -> VertexDeletion
    {
        VertexDeletion result;
        vector<Vertex> relabel(h.vertex_count(), -1);
        for (Vertex v = 0 ; v < h.vertex_count() ; ++v)
            if (! vs.test(v)) {
                relabel[v] = Vertex(result.original_vertex.size());
                result.original_vertex.push_back(v);
            }

        vector<Edge> kept;
        for (size_t i = 0 ; i < h.edge_count() ; ++i) {
            auto & e = h.edge(i);
            if (e.meet(vs) == 0) {
                kept.emplace_back(relabel[e[0]], relabel[e[1]], relabel[e[2]]);
                result.original_edge.push_back(i);
            }
        }

        result.graph = Hypergraph{ int(result.original_vertex.size()), std::move(kept), h.multi_allowed() };
        return result;
    }

    auto binomial2(long long v) -> long long
    {
        return v * (v - 1) / 2;
    }
}
