#include <configlab/canonical.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

using std::size_t;
using std::string;
using std::vector;

namespace configlab
{
    namespace
    {
        class Labeller
        {
            private:
                int _n;
                std::span<const Edge> _edges;
                vector<vector<size_t>> _incidence;
                vector<int> _degree;
                std::optional<CanonicalLabelling> _best;

                /// Refines to the coarsest equitable colouring below colours, normalised to ranks.
                auto refine(vector<int> colours) const -> vector<int>
                {
                    int classes = -1;
                    while (true) {
                        vector<std::pair<vector<int>, int>> signatures(_n);
                        for (Vertex v = 0 ; v < _n ; ++v) {
                            auto & sig = signatures[v].first;
                            sig.push_back(colours[v]);
                            vector<int> pairs;
                            for (auto i : _incidence[v]) {
                                int a = -1, b = -1;
                                for (auto u : _edges[i].vertices())
                                    if (u != v)
                                        (a < 0 ? a : b) = colours[u];
                                if (a > b)
                                    std::swap(a, b);
                                pairs.push_back(a * (_n + 1) + b);
                            }
                            std::sort(pairs.begin(), pairs.end());
                            sig.insert(sig.end(), pairs.begin(), pairs.end());
                            signatures[v].second = v;
                        }

                        vector<vector<int>> distinct;
                        distinct.reserve(_n);
                        for (auto & s : signatures)
                            distinct.push_back(s.first);
                        std::sort(distinct.begin(), distinct.end());
                        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

                        vector<int> next(_n);
                        for (Vertex v = 0 ; v < _n ; ++v)
                            next[v] = int(std::lower_bound(distinct.begin(), distinct.end(), signatures[v].first) - distinct.begin());

                        colours = std::move(next);
                        if (int(distinct.size()) == classes)
                            return colours;
                        classes = int(distinct.size());
                    }
                }

                auto leaf(const vector<int> & colours) -> void
                {
                    vector<Vertex> order(_n);
                    std::iota(order.begin(), order.end(), 0);
                    std::stable_sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return colours[a] < colours[b]; });
                    vector<Vertex> label(_n);
                    for (int i = 0 ; i < _n ; ++i)
                        label[order[i]] = i;

                    vector<std::array<unsigned char, 3>> relabelled;
                    relabelled.reserve(_edges.size());
                    for (auto & e : _edges) {
                        std::array<unsigned char, 3> t{ (unsigned char)label[e[0]], (unsigned char)label[e[1]], (unsigned char)label[e[2]] };
                        std::sort(t.begin(), t.end());
                        relabelled.push_back(t);
                    }
                    std::sort(relabelled.begin(), relabelled.end());

                    string form;
                    form.reserve(3 * relabelled.size());
                    for (auto & t : relabelled)
                        form.append(reinterpret_cast<const char *>(t.data()), 3);

                    if (! _best || form < _best->form)
                        _best = CanonicalLabelling{ std::move(form), std::move(label) };
                }

                auto search(const vector<int> & coloured) -> void
                {
                    auto colours = refine(coloured);

                    // first non-singleton class of non-isolated vertices, by colour
                    int target = -1;
                    vector<int> class_size(_n, 0);
                    for (Vertex v = 0 ; v < _n ; ++v)
                        ++class_size[colours[v]];
                    for (Vertex v = 0 ; v < _n ; ++v)
                        if (_degree[v] > 0 && class_size[colours[v]] > 1 && (target < 0 || colours[v] < target))
                            target = colours[v];

                    if (target < 0) {
                        leaf(colours);
                        return;
                    }

                    for (Vertex v = 0 ; v < _n ; ++v) {
                        if (colours[v] != target)
                            continue;
                        vector<int> individualised(_n);
                        for (Vertex u = 0 ; u < _n ; ++u)
                            individualised[u] = 2 * colours[u] + ((colours[u] == target && u != v) ? 1 : 0);
                        search(individualised);
                    }
                }

            public:
                Labeller(int n, std::span<const Edge> edges) :
                    _n(n),
                    _edges(edges),
                    _incidence(n),
                    _degree(n, 0)
                {
                    for (size_t i = 0 ; i < edges.size() ; ++i)
                        for (auto v : edges[i].vertices()) {
                            _incidence[v].push_back(i);
                            ++_degree[v];
                        }
                }

                auto run() -> CanonicalLabelling
                {
                    search(_degree);
                    return std::move(*_best);
                }
        };
    }

    auto canonical_labelling(int n, std::span<const Edge> edges) -> CanonicalLabelling
    {
        if (n > 255)
            throw HypergraphError{ "canonical labelling supports at most 255 vertices" };
        return Labeller{ n, edges }.run();
    }
}
