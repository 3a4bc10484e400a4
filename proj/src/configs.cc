#include <configlab/configs.hh>
#include <configlab/dense_search.hh>

#include <map>

using std::optional;
using std::pair;
using std::size_t;
using std::to_string;
using std::vector;

namespace configlab
{
    namespace
    {
        auto lowest_inside(const Hypergraph & h, const VertexSet & w, EdgeIndexSet chosen, size_t want) -> EdgeIndexSet
        {
            for (size_t i = 0 ; i < h.edge_count() && chosen.count() < want ; ++i)
                if (! chosen.test(i) && h.edge(i).meet(w) == 3)
                    chosen.set(i);
            return chosen;
        }

        auto validate_params(int s, int k) -> void
        {
            if (k < 1)
                throw ConfigurationError{ "configuration size k must be at least 1, got " + to_string(k) };
            if (s < 3)
                throw ConfigurationError{ "span bound s must be at least 3, got " + to_string(s) };
        }
    }

    auto make_configuration(const Hypergraph & h, EdgeIndexSet edges) -> Configuration
    {
        Configuration result;
        result.vertices = span(h, edges);
        result.span_size = result.vertices.count();
        result.ell = int(edges.count());
        result.edges = std::move(edges);
        return result;
    }

    auto configuration_to_json(const Configuration & c) -> nlohmann::json
    {
        return { { "edges", c.edges.indices() }, { "ell", c.ell }, { "span", c.span_size } };
    }

    auto find_configuration(const Hypergraph & h, int s, int k) -> optional<Configuration>
    {
        validate_params(s, k);
        if (size_t(k) > h.edge_count())
            return std::nullopt;

        DenseSetSearch search{ h };
        auto w = search.find(VertexSet{ }, s, size_t(k));
        if (! w)
            return std::nullopt;
        return make_configuration(h, lowest_inside(h, *w, EdgeIndexSet(h.edge_count()), size_t(k)));
    }

    auto find_configuration_through(const Hypergraph & h, size_t edge, int s, int k) -> optional<Configuration>
    {
        validate_params(s, k);
        if (edge >= h.edge_count())
            throw ConfigurationError{ "edge index " + to_string(edge) + " out of range" };
        if (size_t(k) > h.edge_count())
            return std::nullopt;

        DenseSetSearch search{ h };
        auto w = search.find(h.edge(edge).as_set(), s, size_t(k));
        if (! w)
            return std::nullopt;
        EdgeIndexSet chosen(h.edge_count());
        chosen.set(edge);
        return make_configuration(h, lowest_inside(h, *w, std::move(chosen), size_t(k)));
    }

    auto g_forbidden(int k, bool multi) -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int l = 2 ; l <= k - 1 ; ++l)
            result.emplace_back(l + 1, l);
        if (multi && k == 2)
            result.emplace_back(3, 2);
        return result;
    }

    auto freeness_report(const Hypergraph & h, int k) -> FreenessReport
    {
        if (k < 2)
            throw ConfigurationError{ "k must be at least 2, got " + to_string(k) };

        FreenessReport report;
        report.k = k;
        if (auto c = find_configuration(h, k + 2, k)) {
            report.is_f_free = false;
            report.is_g_free = false;
            report.first_violation = std::move(c);
            report.violation_s = k + 2;
            return report;
        }

        for (auto [s, l] : g_forbidden(k, h.multi_allowed())) {
            if (auto c = find_configuration(h, s, l)) {
                report.is_g_free = false;
                report.first_violation = std::move(c);
                report.violation_s = s;
                return report;
            }
        }
        return report;
    }

    auto freeness_report_to_json(const FreenessReport & r) -> nlohmann::json
    {
        nlohmann::json j = { { "k", r.k }, { "is_f_free", r.is_f_free }, { "is_g_free", r.is_g_free } };
        if (r.first_violation) {
            auto v = configuration_to_json(*r.first_violation);
            v["s"] = r.violation_s;
            v["vertices"] = r.first_violation->vertices.members();
            j["first_violation"] = v;
        }
        else
            j["first_violation"] = nullptr;
        return j;
    }

    auto is_f_free(const Hypergraph & h, int k) -> bool
    {
        if (k < 2)
            throw ConfigurationError{ "k must be at least 2, got " + to_string(k) };
        return ! find_configuration(h, k + 2, k);
    }

    auto is_g_free(const Hypergraph & h, int k) -> bool
    {
        return freeness_report(h, k).is_g_free;
    }

    auto find_seed_configuration(const Hypergraph & h, int k) -> optional<Configuration>
    {
        for (int l = 2 ; l <= k - 1 ; ++l)
            if (auto c = find_configuration(h, l + 1, l))
                return c;
        return std::nullopt;
    }

    namespace
    {
        /// Largest l' in (ell, k-1] admitting an (l'+1,l')-configuration that contains c.
        auto find_extension(const Hypergraph & h, const Configuration & c, int k) -> optional<Configuration>
        {
            DenseSetSearch search{ h };
            for (int target = k - 1 ; target > c.ell ; --target) {
                if (auto w = search.find(c.vertices, target + 1, size_t(target)))
                    return make_configuration(h, lowest_inside(h, *w, c.edges, size_t(target)));
            }
            return std::nullopt;
        }

        auto greedy_step(const Hypergraph & h, const Configuration & c, int k) -> optional<Configuration>
        {
            auto & vs = c.vertices;
            if (c.ell + 1 <= k - 1) {
                for (int wanted_meet : { 3, 2 })
                    for (size_t i = 0 ; i < h.edge_count() ; ++i)
                        if (! c.edges.test(i) && h.edge(i).meet(vs) == wanted_meet) {
                            auto es = c.edges;
                            es.set(i);
                            return make_configuration(h, std::move(es));
                        }
            }

            if (c.ell + 2 <= k - 1) {
                std::map<pair<Vertex, Vertex>, size_t> by_outside_pair;
                for (size_t i = 0 ; i < h.edge_count() ; ++i) {
                    auto & e = h.edge(i);
                    if (c.edges.test(i) || e.meet(vs) != 1)
                        continue;
                    vector<Vertex> outside;
                    for (auto v : e.vertices())
                        if (! vs.test(v))
                            outside.push_back(v);
                    auto [it, inserted] = by_outside_pair.try_emplace({ outside[0], outside[1] }, i);
                    if (! inserted) {
                        auto es = c.edges;
                        es.set(it->second);
                        es.set(i);
                        return make_configuration(h, std::move(es));
                    }
                }
            }
            return std::nullopt;
        }
    }

    auto is_k_maximal(const Hypergraph & h, const Configuration & c, int k) -> bool
    {
        return ! find_extension(h, c, k);
    }

    auto grow_k_maximal(const Hypergraph & h, const Configuration & seed, int k) -> Configuration
    {
        Configuration current;
        try {
            current = make_configuration(h, seed.edges);
        }
        catch (const HypergraphError & e) {
            throw ConfigurationError{ std::string{ "invalid seed: " } + e.what() };
        }
        if (current.ell < 2 || current.ell > k - 1 || current.span_size > current.ell + 1)
            throw ConfigurationError{ "seed with " + to_string(current.ell) + " edges spanning " + to_string(current.span_size)
                + " vertices is not an (l+1,l)-configuration with 2 <= l <= " + to_string(k - 1) };

        while (auto next = greedy_step(h, current, k))
            current = std::move(*next);

        while (auto next = find_extension(h, current, k))
            current = std::move(*next);

        return current;
    }
}
