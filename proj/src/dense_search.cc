#include <configlab/dense_search.hh>

#include <algorithm>

using std::optional;
using std::size_t;
using std::vector;

namespace configlab
{
    namespace
    {
        constexpr size_t no_index = size_t(-1);
    }

    DenseSetSearch::DenseSetSearch(int n, std::span<const Edge> edges, std::span<const vector<size_t>> incidence) :
        _n(n),
        _edges(edges),
        _incidence(incidence),
        _gain(n, 0)
    {
    }

    DenseSetSearch::DenseSetSearch(const Hypergraph & h) :
        DenseSetSearch(h.vertex_count(), h.edges(), h.incidence_lists())
    {
    }

    auto DenseSetSearch::count_added(VertexSet & w, const VertexSet & fresh) const -> size_t
    {
        // an edge is counted when its last vertex joins w
        size_t added = 0;
        fresh.for_each([&] (Vertex x) {
            w.set(x);
            for (auto i : _incidence[x])
                if (_edges[i].meet(w) == 3)
                    ++added;
        });
        return added;
    }

    auto DenseSetSearch::best_single_extension(const VertexSet & w, size_t inside) -> optional<VertexSet>
    {
        vector<Vertex> touched;
        w.for_each([&] (Vertex v) {
            for (auto i : _incidence[v]) {
                auto & e = _edges[i];
                if (e.meet(w) != 2)
                    continue;
                // count each edge once, from the smaller of its two vertices in w
                Vertex other_inside = -1, outside = -1;
                for (auto u : e.vertices()) {
                    if (u == v)
                        continue;
                    if (w.test(u))
                        other_inside = u;
                    else
                        outside = u;
                }
                if (other_inside < v)
                    continue;
                if (0 == _gain[outside]++)
                    touched.push_back(outside);
            }
        });

        optional<VertexSet> result;
        std::sort(touched.begin(), touched.end());
        for (auto x : touched) {
            if (! result && inside + size_t(_gain[x]) >= _k) {
                result = w;
                result->set(x);
            }
            _gain[x] = 0;
        }
        return result;
    }

    auto DenseSetSearch::search(const VertexSet & w, size_t inside, size_t last) -> optional<VertexSet>
    {
        ++_nodes;
        if (inside >= _k)
            return w;

        int budget = _s - w.count();
        if (budget <= 0)
            return std::nullopt;
        if (budget == 1)
            return best_single_extension(w, inside);

        size_t first = (last == no_index) ? 0 : last + 1;
        auto try_edge = [&] (size_t i) -> optional<VertexSet> {
            auto fresh = _edges[i].as_set() - w;
            int fresh_count = fresh.count();
            if (0 == fresh_count || fresh_count > budget)
                return std::nullopt;
            auto next = w;
            auto next_inside = inside + count_added(next, fresh);
            return search(next, next_inside, i);
        };

        if (budget >= 3) {
            for (size_t i = first ; i < _edges.size() ; ++i)
                if (auto r = try_edge(i))
                    return r;
        }
        else {
            // only edges meeting w can fit in a budget of two
            vector<size_t> candidates;
            w.for_each([&] (Vertex v) {
                auto & inc = _incidence[v];
                auto from = (last == no_index) ? inc.begin() : std::upper_bound(inc.begin(), inc.end(), last);
                candidates.insert(candidates.end(), from, inc.end());
            });
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (auto i : candidates)
                if (auto r = try_edge(i))
                    return r;
        }

        return std::nullopt;
    }

    auto DenseSetSearch::find(const VertexSet & base, int s, size_t k) -> optional<VertexSet>
    {
        _s = s;
        _k = k;
        _nodes = 0;

        if (base.count() > s)
            return std::nullopt;

        VertexSet w;
        auto inside = count_added(w, base);

        if (s >= _n) {
            if (_edges.size() >= k)
                return VertexSet::range(_n);
            return std::nullopt;
        }

        return search(w, inside, no_index);
    }
}
