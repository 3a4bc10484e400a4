#pragma once

#include <configlab/hypergraph.hh>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace configlab
{
    /// Exact search for a vertex set W with base ⊆ W, |W| <= s and at least k
    /// edges inside W. Any k edges inside such a W form an (s,k)-configuration,
    /// and every (s,k)-configuration yields one, so this decides existence.
    ///
    /// Candidate sets are grown from base by adding, in increasing index order,
    /// edges that bring at least one new vertex; edges adding nothing are already
    /// counted. With one vertex of budget left the best extension is computed
    /// directly from the edges meeting W in two vertices.
    class DenseSetSearch
    {
        private:
            int _n;
            std::span<const Edge> _edges;
            std::span<const std::vector<std::size_t>> _incidence;
            int _s = 0;
            std::size_t _k = 0;
            std::vector<int> _gain;
            std::vector<std::size_t> _scratch;
            unsigned long long _nodes = 0;

            auto count_added(VertexSet & w, const VertexSet & fresh) const -> std::size_t;
            auto search(const VertexSet & w, std::size_t inside, std::size_t last) -> std::optional<VertexSet>;
            auto best_single_extension(const VertexSet & w, std::size_t inside) -> std::optional<VertexSet>;

        public:
            DenseSetSearch(int n, std::span<const Edge> edges, std::span<const std::vector<std::size_t>> incidence);
            explicit DenseSetSearch(const Hypergraph & h);

            [[nodiscard]] auto find(const VertexSet & base, int s, std::size_t k) -> std::optional<VertexSet>;

            [[nodiscard]] auto nodes() const -> unsigned long long { return _nodes; }
    };
}
