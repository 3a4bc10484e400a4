#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace configlab
{
    using Vertex = int;

    inline constexpr int max_vertices = 128;

    /// Fixed-width set over vertex ids [0, 128).
    class VertexSet
    {
        private:
            std::array<std::uint64_t, 2> _words{ };

        public:
            constexpr VertexSet() = default;

            constexpr auto set(Vertex v) -> void
            {
                _words[v >> 6] |= std::uint64_t{ 1 } << (v & 63);
            }

            constexpr auto reset(Vertex v) -> void
            {
                _words[v >> 6] &= ~(std::uint64_t{ 1 } << (v & 63));
            }

            [[nodiscard]] constexpr auto test(Vertex v) const -> bool
            {
                return (_words[v >> 6] >> (v & 63)) & 1;
            }

            [[nodiscard]] constexpr auto count() const -> int
            {
                return std::popcount(_words[0]) + std::popcount(_words[1]);
            }

            [[nodiscard]] constexpr auto empty() const -> bool
            {
                return 0 == (_words[0] | _words[1]);
            }

            [[nodiscard]] constexpr auto intersects(const VertexSet & o) const -> bool
            {
                return 0 != ((_words[0] & o._words[0]) | (_words[1] & o._words[1]));
            }

            [[nodiscard]] constexpr auto is_subset_of(const VertexSet & o) const -> bool
            {
                return 0 == ((_words[0] & ~o._words[0]) | (_words[1] & ~o._words[1]));
            }

            constexpr auto operator|= (const VertexSet & o) -> VertexSet &
            {
                _words[0] |= o._words[0];
                _words[1] |= o._words[1];
                return *this;
            }

            constexpr auto operator&= (const VertexSet & o) -> VertexSet &
            {
                _words[0] &= o._words[0];
                _words[1] &= o._words[1];
                return *this;
            }

            constexpr auto operator-= (const VertexSet & o) -> VertexSet &
            {
                _words[0] &= ~o._words[0];
                _words[1] &= ~o._words[1];
                return *this;
            }

            [[nodiscard]] friend constexpr auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            [[nodiscard]] friend constexpr auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            [[nodiscard]] friend constexpr auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
            [[nodiscard]] friend constexpr auto operator== (const VertexSet &, const VertexSet &) -> bool = default;

            /// Lowest member, or -1 when empty.
            [[nodiscard]] constexpr auto first() const -> Vertex
            {
                if (_words[0])
                    return std::countr_zero(_words[0]);
                if (_words[1])
                    return 64 + std::countr_zero(_words[1]);
                return -1;
            }

            template <typename F_>
            constexpr auto for_each(F_ && f) const -> void
            {
                for (int w = 0 ; w < 2 ; ++w) {
                    auto bits = _words[w];
                    while (bits) {
                        int b = std::countr_zero(bits);
                        f(Vertex(w * 64 + b));
                        bits &= bits - 1;
                    }
                }
            }

            [[nodiscard]] auto members() const -> std::vector<Vertex>
            {
                std::vector<Vertex> result;
                result.reserve(count());
                for_each([&] (Vertex v) { result.push_back(v); });
                return result;
            }

            [[nodiscard]] static auto of(std::initializer_list<Vertex> vs) -> VertexSet
            {
                VertexSet result;
                for (auto v : vs)
                    result.set(v);
                return result;
            }

            [[nodiscard]] static auto range(int n) -> VertexSet
            {
                VertexSet result;
                for (Vertex v = 0 ; v < n ; ++v)
                    result.set(v);
                return result;
            }
    };

    /// Set of edge indices into a hypergraph's edge list.
    class EdgeIndexSet
    {
        private:
            boost::dynamic_bitset<std::uint64_t> _bits;

        public:
            EdgeIndexSet() = default;

            explicit EdgeIndexSet(std::size_t universe) :
                _bits(universe)
            {
            }

            [[nodiscard]] static auto of(std::size_t universe, const std::vector<std::size_t> & indices) -> EdgeIndexSet
            {
                EdgeIndexSet result(universe);
                for (auto i : indices)
                    result.set(i);
                return result;
            }

            [[nodiscard]] auto universe() const -> std::size_t { return _bits.size(); }

            auto set(std::size_t i) -> void
            {
                if (i >= _bits.size())
                    _bits.resize(i + 1);
                _bits.set(i);
            }

            auto reset(std::size_t i) -> void
            {
                if (i < _bits.size())
                    _bits.reset(i);
            }

            [[nodiscard]] auto test(std::size_t i) const -> bool
            {
                return i < _bits.size() && _bits.test(i);
            }

            [[nodiscard]] auto count() const -> std::size_t { return _bits.count(); }

            [[nodiscard]] auto empty() const -> bool { return _bits.none(); }

            [[nodiscard]] auto indices() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                result.reserve(_bits.count());
                for (auto i = _bits.find_first() ; i != decltype(_bits)::npos ; i = _bits.find_next(i))
                    result.push_back(i);
                return result;
            }

            [[nodiscard]] auto is_subset_of(const EdgeIndexSet & o) const -> bool
            {
                for (auto i = _bits.find_first() ; i != decltype(_bits)::npos ; i = _bits.find_next(i))
                    if (! o.test(i))
                        return false;
                return true;
            }

            [[nodiscard]] friend auto operator== (const EdgeIndexSet & a, const EdgeIndexSet & b) -> bool
            {
                return a.indices() == b.indices();
            }
    };
}
