#include <configlab/shadowbound.hh>
#include <configlab/configs.hh>

#include <algorithm>
#include <map>

using std::pair;
using std::size_t;
using std::to_string;
using std::vector;

namespace configlab
{
    namespace
    {
        auto pairs_of(const Edge & e) -> std::array<pair<Vertex, Vertex>, 3>
        {
            return { { { e[0], e[1] }, { e[0], e[2] }, { e[1], e[2] } } };
        }

        auto require_g_free(const Hypergraph & h, int k) -> void
        {
            auto report = freeness_report(h, k);
            if (! report.is_g_free)
                throw NotFreeError{ "hypergraph is not g-free for k = " + to_string(k), *report.first_violation, report.violation_s };
        }
    }

    auto build_intersection_graph(const Hypergraph & h) -> IntersectionGraph
    {
        IntersectionGraph result;
        auto m = h.edge_count();
        result.adjacency.resize(m);

        std::map<pair<Vertex, Vertex>, vector<size_t>> by_pair;
        for (size_t i = 0 ; i < m ; ++i)
            for (auto & p : pairs_of(h.edge(i)))
                by_pair[p].push_back(i);

        for (auto & [p, es] : by_pair)
            for (size_t a = 0 ; a < es.size() ; ++a)
                for (size_t b = a + 1 ; b < es.size() ; ++b) {
                    result.adjacency[es[a]].push_back(es[b]);
                    result.adjacency[es[b]].push_back(es[a]);
                }

        for (auto & adj : result.adjacency) {
            std::sort(adj.begin(), adj.end());
            adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        }

        result.component_of.assign(m, size_t(-1));
        for (size_t start = 0 ; start < m ; ++start) {
            if (result.component_of[start] != size_t(-1))
                continue;
            auto id = result.components.size();
            EdgeIndexSet members(m);
            vector<size_t> stack{ start };
            result.component_of[start] = id;
            while (! stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                members.set(x);
                for (auto y : result.adjacency[x])
                    if (result.component_of[y] == size_t(-1)) {
                        result.component_of[y] = id;
                        stack.push_back(y);
                    }
            }
            result.components.push_back(std::move(members));
        }
        return result;
    }

    auto two_shadow(const Hypergraph & h, const EdgeIndexSet & ys) -> Shadow2
    {
        Shadow2 result;
        for (auto i : ys.indices()) {
            if (i >= h.edge_count())
                throw HypergraphError{ "edge index " + to_string(i) + " out of range" };
            for (auto & p : pairs_of(h.edge(i)))
                result.insert(p);
        }
        return result;
    }

    auto verify_component_claims(const Hypergraph & h, int k) -> ComponentReport
    {
        require_g_free(h, k);

        ComponentReport report;
        report.k = k;
        auto graph = build_intersection_graph(h);

        Shadow2 all_pairs;
        for (auto & members : graph.components) {
            ComponentClaim claim;
            claim.size = members.count();
            claim.span = span(h, members).count();
            auto shadow = two_shadow(h, members);
            claim.shadow = shadow.size();
            report.total_shadow += claim.shadow;
            all_pairs.insert(shadow.begin(), shadow.end());

            auto where = "component of " + to_string(claim.size) + " edges";
            if (claim.size > size_t(k - 1))
                throw SparsifierError{ where + " exceeds k-1 = " + to_string(k - 1) };
            if (claim.span != int(claim.size) + 2)
                throw SparsifierError{ where + " spans " + to_string(claim.span) + " vertices" };
            if (claim.shadow != 2 * claim.size + 1)
                throw SparsifierError{ where + " has a 2-shadow of " + to_string(claim.shadow) + " pairs" };

            // independent route to v(T) <= k-1: a component with k or more edges
            // would carry a (k+2,k)-configuration
            if (claim.size >= size_t(k) && find_configuration(h.restricted_to(members), k + 2, k))
                throw SparsifierError{ where + " contains a forbidden configuration" };

            report.components.push_back(claim);
        }

        report.shadows_disjoint = all_pairs.size() == report.total_shadow;
        if (! report.shadows_disjoint)
            throw SparsifierError{ "2-shadows of distinct components overlap" };
        return report;
    }

    auto edge_bound_check(const Hypergraph & h, int k) -> EdgeBound
    {
        require_g_free(h, k);
        EdgeBound result;
        result.bound = Rational(static_cast<long long>(k - 1), static_cast<long long>(2 * k - 1)) * Rational(binomial2(h.vertex_count()));
        // (2k-1) e <= (k-1) C(v,2)
        result.holds = (2LL * k - 1) * static_cast<long long>(h.edge_count()) <= (k - 1LL) * binomial2(h.vertex_count());
        return result;
    }

    auto squared_density_bound_holds(long long e, long long v, int k) -> bool
    {
        return (4LL * k - 2) * e <= (k - 1LL) * v * v;
    }

    auto component_report_to_json(const ComponentReport & r, const EdgeBound & b) -> nlohmann::json
    {
        auto comps = nlohmann::json::array();
        for (auto & c : r.components)
            comps.push_back({ { "size", c.size }, { "span", c.span }, { "shadow", c.shadow } });
        return {
            { "components", comps },
            { "total_shadow", r.total_shadow },
            { "bound_num", b.bound.numerator() },
            { "bound_den", b.bound.denominator() },
            { "holds", b.holds }
        };
    }
}
