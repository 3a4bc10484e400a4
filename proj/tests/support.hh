#pragma once

#include "oracles.hh"

#include <configlab/hypergraph.hh>

#include <algorithm>
#include <random>
#include <vector>

namespace test_support
{
    inline auto fano() -> configlab::Hypergraph
    {
        using configlab::Edge;
        return { 7, { Edge{ 0, 1, 2 }, Edge{ 0, 3, 4 }, Edge{ 0, 5, 6 }, Edge{ 1, 3, 5 }, Edge{ 1, 4, 6 }, Edge{ 2, 3, 6 }, Edge{ 2, 4, 5 } } };
    }

    inline auto triples(const configlab::Hypergraph & h) -> std::vector<oracle::Triple>
    {
        std::vector<oracle::Triple> result;
        for (auto & e : h.edges())
            result.push_back({ e[0], e[1], e[2] });
        return result;
    }

    /// m distinct uniformly random triples on n vertices.
    inline auto random_hypergraph(int n, int m, std::mt19937 & rng) -> configlab::Hypergraph
    {
        std::vector<configlab::Edge> edges;
        std::uniform_int_distribution<int> pick(0, n - 1);
        while (int(edges.size()) < m) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (a == b || b == c || a == c)
                continue;
            configlab::Edge e{ a, b, c };
            if (std::find(edges.begin(), edges.end(), e) == edges.end())
                edges.push_back(e);
        }
        return { n, std::move(edges) };
    }

    inline auto permuted(const configlab::Hypergraph & h, std::mt19937 & rng) -> configlab::Hypergraph
    {
        std::vector<int> p(h.vertex_count());
        for (int i = 0 ; i < h.vertex_count() ; ++i)
            p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<configlab::Edge> edges;
        for (auto & e : h.edges())
            edges.emplace_back(p[e[0]], p[e[1]], p[e[2]]);
        std::shuffle(edges.begin(), edges.end(), rng);
        return { h.vertex_count(), std::move(edges), h.multi_allowed() };
    }
}
