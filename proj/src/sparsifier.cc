#include <configlab/sparsifier.hh>

#include <map>
#include <numeric>

using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace configlab
{
    namespace
    {
        struct DisjointSets
        {
            vector<int> parent, size;

            explicit DisjointSets(int n) :
                parent(n),
                size(n, 1)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                if (size[a] < size[b])
                    std::swap(a, b);
                parent[b] = a;
                size[a] += size[b];
                return true;
            }
        };

        auto rational_json(const Rational & r) -> nlohmann::json
        {
            return { { "num", r.numerator() }, { "den", r.denominator() } };
        }
    }

    auto structural_checks(const Hypergraph & h, const Configuration & s, int k) -> StructuralReport
    {
        if (! is_k_maximal(h, s, k))
            throw ConfigurationError{ "configuration with " + to_string(s.ell) + " edges is not " + to_string(k) + "-maximal" };

        StructuralReport report;
        auto & part = report.partition;
        part.meets_one = EdgeIndexSet(h.edge_count());
        part.meets_two = EdgeIndexSet(h.edge_count());
        part.inside = EdgeIndexSet(h.edge_count());

        auto & vs = s.vertices;
        auto & link = report.link;
        link.vertices = h.all_vertices() - vs;

        std::map<pair<Vertex, Vertex>, size_t> outside_pairs;
        for (size_t i = 0 ; i < h.edge_count() ; ++i) {
            auto & e = h.edge(i);
            switch (e.meet(vs)) {
                case 1: {
                    part.meets_one.set(i);
                    vector<Vertex> outside;
                    for (auto v : e.vertices())
                        if (! vs.test(v))
                            outside.push_back(v);
                    ++outside_pairs[{ outside[0], outside[1] }];
                    break;
                }
                case 2: part.meets_two.set(i); break;
                case 3: part.inside.set(i); break;
                default: break;
            }
        }

        DisjointSets components{ h.vertex_count() };
        for (auto & [pr, count] : outside_pairs) {
            link.edges.push_back(pr);
            if (! components.unite(pr.first, pr.second))
                link.is_forest = false;
        }
        link.vertices.for_each([&] (Vertex v) {
            if (components.find(v) == v) {
                ++link.component_count;
                link.max_component_size = std::max(link.max_component_size, components.size[v]);
            }
        });

        auto & verdicts = report.verdicts;
        verdicts.inside_at_most_k_minus_1 = part.inside.count() <= size_t(k - 1);
        verdicts.none_meet_in_two = part.meets_two.empty();
        verdicts.outside_pairs_distinct = outside_pairs.size() == part.meets_one.count();
        verdicts.link_is_small_forest = link.is_forest && link.max_component_size <= k - s.ell;
        return report;
    }

    auto step_loss_bound(long long v, long long v_s, int k) -> Rational
    {
        return Rational(k - 1, k) * Rational(v - v_s) + Rational(k - 1);
    }

    auto aggregate_loss_bound(long long v, long long v_prime, int k) -> Rational
    {
        return Rational(k - 1, 6LL * k) * Rational((v - v_prime) * (v + v_prime + 2LL * k));
    }

    auto extract_free_subgraph(const Hypergraph & h, int k) -> Extraction
    {
        if (k < 2)
            throw ConfigurationError{ "k must be at least 2, got " + to_string(k) };
        if (auto witness = find_configuration(h, k + 2, k))
            throw NotFreeError{ "input is not (" + to_string(k + 2) + "," + to_string(k) + ")-free", std::move(*witness), k + 2 };

        Extraction result;
        result.result = h;
        result.original_vertex.resize(h.vertex_count());
        std::iota(result.original_vertex.begin(), result.original_vertex.end(), 0);
        result.original_edge.resize(h.edge_count());
        std::iota(result.original_edge.begin(), result.original_edge.end(), size_t{ 0 });

        auto & trace = result.trace;
        trace.k = k;
        trace.initial_vertices = h.vertex_count();
        trace.initial_edges = h.edge_count();

        while (auto seed = find_seed_configuration(result.result, k)) {
            auto & current = result.result;
            auto s = grow_k_maximal(current, *seed, k);
            auto report = structural_checks(current, s, k);

            ExtractionStep step;
            step.ell = s.ell;
            for (auto i : s.edges.indices())
                step.configuration_edges.push_back(result.original_edge[i]);
            s.vertices.for_each([&] (Vertex v) { step.configuration_vertices.push_back(result.original_vertex[v]); });
            step.vertices_before = current.vertex_count();
            step.edges_before = current.edge_count();
            step.meets_one = report.partition.meets_one.count();
            step.meets_two = report.partition.meets_two.count();
            step.inside = report.partition.inside.count();
            step.link_edges = report.link.edges.size();
            step.link_is_forest = report.link.is_forest;
            step.link_components = report.link.component_count;
            step.link_max_component = report.link.max_component_size;
            step.verdicts = report.verdicts;
            step.loss_bound = step_loss_bound(current.vertex_count(), s.span_size, k);

            auto deletion = delete_vertices(current, s.vertices);
            step.loss = current.edge_count() - deletion.graph.edge_count();

            auto describe = [&] {
                auto j = step_to_json(step, trace.steps.size());
                return j.dump();
            };

            if (! report.verdicts.all())
                throw SparsifierError{ "structural conclusion violated: " + describe() };
            if (step.loss != step.meets_one + step.meets_two + step.inside)
                throw SparsifierError{ "edge loss does not match the partition: " + describe() };
            if (Rational(static_cast<long long>(step.loss)) > step.loss_bound)
                throw SparsifierError{ "per-step loss bound violated: " + describe() };

            vector<Vertex> vertex_map;
            for (auto v : deletion.original_vertex)
                vertex_map.push_back(result.original_vertex[v]);
            vector<size_t> edge_map;
            for (auto i : deletion.original_edge)
                edge_map.push_back(result.original_edge[i]);
            result.original_vertex = std::move(vertex_map);
            result.original_edge = std::move(edge_map);
            result.result = std::move(deletion.graph);
            trace.steps.push_back(std::move(step));
        }

        trace.final_vertices = result.result.vertex_count();
        trace.final_edges = result.result.edge_count();
        trace.aggregate_bound = aggregate_loss_bound(trace.initial_vertices, trace.final_vertices, k);

        size_t summed = 0;
        for (auto & step : trace.steps)
            summed += step.loss;
        if (summed != trace.total_loss())
            throw SparsifierError{ "per-step losses do not sum to the total loss" };
        if (! trace.aggregate_holds())
            throw SparsifierError{ "aggregate loss bound violated: " + trace_summary_json(trace).dump() };
        if (! is_g_free(result.result, k))
            throw SparsifierError{ "extraction output is not g-free" };

        return result;
    }

    auto dense_hypotheses_met(const Hypergraph & h, int k) -> bool
    {
        long long v = h.vertex_count(), e = static_cast<long long>(h.edge_count());
        // e >= (1/6)(1 - 1/(2k)) v^2  <=>  12k e >= (2k-1) v^2
        return v >= 8LL * k * k && 12LL * k * e >= (2LL * k - 1) * v * v;
    }

    auto dense_extract_with_certificate(const Hypergraph & h, int k) -> pair<Extraction, DenseCertificate>
    {
        auto extraction = extract_free_subgraph(h, k);

        DenseCertificate cert;
        cert.hypotheses_met = dense_hypotheses_met(h, k);
        cert.v = h.vertex_count();
        cert.e = static_cast<long long>(h.edge_count());
        cert.v_prime = extraction.result.vertex_count();
        cert.e_prime = static_cast<long long>(extraction.result.edge_count());
        cert.size_lhs = 4LL * k * cert.v_prime * cert.v_prime;
        cert.size_rhs = cert.v * cert.v;
        cert.density_lhs = cert.e_prime * cert.v * cert.v;
        cert.density_rhs = cert.e * cert.v_prime * cert.v_prime;
        cert.size_holds = cert.size_lhs >= cert.size_rhs;
        cert.density_holds = cert.v_prime > 0 && cert.density_lhs >= cert.density_rhs;

        if (cert.hypotheses_met && ! (cert.size_holds && cert.density_holds))
            throw SparsifierError{ "dense-subgraph conclusion violated: " + certificate_to_json(cert).dump() };

        return { std::move(extraction), cert };
    }

    auto step_to_json(const ExtractionStep & step, size_t index) -> nlohmann::json
    {
        return {
            { "step", index },
            { "ell", step.ell },
            { "configuration_edges", step.configuration_edges },
            { "configuration_vertices", step.configuration_vertices },
            { "v_before", step.vertices_before },
            { "e_before", step.edges_before },
            { "v_s", step.configuration_vertices.size() },
            { "E1", step.meets_one },
            { "E2", step.meets_two },
            { "E3", step.inside },
            { "link", { { "edges", step.link_edges }, { "forest", step.link_is_forest },
                        { "components", step.link_components }, { "max_component", step.link_max_component } } },
            { "loss", step.loss },
            { "loss_bound", rational_json(step.loss_bound) },
            { "verdicts", { { "inside_at_most_k_minus_1", step.verdicts.inside_at_most_k_minus_1 },
                            { "none_meet_in_two", step.verdicts.none_meet_in_two },
                            { "outside_pairs_distinct", step.verdicts.outside_pairs_distinct },
                            { "link_is_small_forest", step.verdicts.link_is_small_forest } } }
        };
    }

    auto trace_summary_json(const ExtractionTrace & trace) -> nlohmann::json
    {
        return {
            { "k", trace.k },
            { "steps", trace.steps.size() },
            { "v", trace.initial_vertices },
            { "e", trace.initial_edges },
            { "v_prime", trace.final_vertices },
            { "e_prime", trace.final_edges },
            { "loss", trace.total_loss() },
            { "aggregate_bound", rational_json(trace.aggregate_bound) },
            { "aggregate_holds", trace.aggregate_holds() }
        };
    }

    auto certificate_to_json(const DenseCertificate & c) -> nlohmann::json
    {
        nlohmann::json j = {
            { "hypotheses_met", c.hypotheses_met },
            { "v", c.v }, { "e", c.e }, { "v_prime", c.v_prime }, { "e_prime", c.e_prime },
            { "size", { { "lhs_4k_vprime_sq", c.size_lhs }, { "rhs_v_sq", c.size_rhs }, { "holds", c.size_holds } } },
            { "density", { { "lhs_eprime_v_sq", c.density_lhs }, { "rhs_e_vprime_sq", c.density_rhs }, { "holds", c.density_holds } } }
        };
        if (! c.hypotheses_met)
            j["note"] = "hypotheses unmet - conclusions not asserted";
        return j;
    }

    auto trace_to_json_lines(const ExtractionTrace & trace) -> string
    {
        string result;
        for (size_t i = 0 ; i < trace.steps.size() ; ++i)
            result += step_to_json(trace.steps[i], i).dump() + "\n";
        return result;
    }
}
