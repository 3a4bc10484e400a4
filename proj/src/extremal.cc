#include <configlab/extremal.hh>
#include <configlab/canonical.hh>
#include <configlab/configs.hh>
#include <configlab/dense_search.hh>
#include <configlab/io.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace configlab
{
    namespace
    {
        /// Edge list that grows and shrinks at the back, with incidence lists,
        /// for checking whether the most recent edge created a configuration.
        class GrowingHypergraph
        {
            private:
                int _n;
                vector<Edge> _edges;
                vector<vector<size_t>> _incidence;

            public:
                explicit GrowingHypergraph(int n) :
                    _n(n),
                    _incidence(n)
                {
                }

                auto push(const Edge & e) -> void
                {
                    for (auto v : e.vertices())
                        _incidence[v].push_back(_edges.size());
                    _edges.push_back(e);
                }

                auto pop() -> void
                {
                    for (auto v : _edges.back().vertices())
                        _incidence[v].pop_back();
                    _edges.pop_back();
                }

                /// No forbidden configuration passes through the last edge.
                [[nodiscard]] auto last_is_free(const vector<pair<int, int>> & forbidden) const -> bool
                {
                    DenseSetSearch search{ _n, _edges, _incidence };
                    auto base = _edges.back().as_set();
                    for (auto [s, k] : forbidden)
                        if (search.find(base, s, size_t(k)))
                            return false;
                    return true;
                }

                /// Pushes e if it keeps the hypergraph free.
                auto try_add(const Edge & e, const vector<pair<int, int>> & forbidden) -> bool
                {
                    push(e);
                    if (last_is_free(forbidden))
                        return true;
                    pop();
                    return false;
                }

                [[nodiscard]] auto edges() const -> const vector<Edge> & { return _edges; }
        };

        auto uniform_below(std::mt19937_64 & rng, uint64_t bound) -> uint64_t
        {
            auto limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
            uint64_t x;
            do {
                x = rng();
            } while (x >= limit);
            return x % bound;
        }

        template <typename T_>
        auto shuffle(vector<T_> & items, std::mt19937_64 & rng) -> void
        {
            for (size_t i = items.size() ; i > 1 ; --i)
                std::swap(items[i - 1], items[uniform_below(rng, i)]);
        }

        auto greedy_complete(GrowingHypergraph & g, int n, const vector<pair<int, int>> & forbidden, std::mt19937_64 & rng) -> void
        {
            auto triples = all_triples(n);
            shuffle(triples, rng);
            for (auto & t : triples)
                g.try_add(t, forbidden);
        }

        auto is_free(const Hypergraph & h, const vector<pair<int, int>> & forbidden) -> bool
        {
            for (auto [s, k] : forbidden)
                if (find_configuration(h, s, k))
                    return false;
            return true;
        }

        class TripleIndex
        {
            private:
                int _n;
                vector<int> _index;

            public:
                explicit TripleIndex(int n) :
                    _n(n),
                    _index(n * n * n, -1)
                {
                    int i = 0;
                    for (auto & t : all_triples(n))
                        _index[(t[0] * n + t[1]) * n + t[2]] = i++;
                }

                [[nodiscard]] auto operator() (const Edge & e) const -> int
                {
                    return _index[(e[0] * _n + e[1]) * _n + e[2]];
                }
        };

        struct Node
        {
            vector<Edge> edges;
            vector<int> candidates;
        };

        class ExtremalSearch
        {
            private:
                int _n;
                SearchMode _mode;
                int _s, _k;
                const SearchConfig & _cfg;
                vector<pair<int, int>> _forbidden;
                vector<Edge> _triples;
                TripleIndex _triple_index;
                bool _linear;

                std::atomic<size_t> _best{ 0 };
                vector<Edge> _best_edges;
                std::mutex _best_mutex;

                std::atomic<unsigned long long> _nodes{ 0 }, _prunes{ 0 }, _duplicates{ 0 };
                std::atomic<bool> _out_of_budget{ false };
                std::chrono::steady_clock::time_point _start;

                auto offer(const vector<Edge> & edges) -> void
                {
                    std::lock_guard<std::mutex> guard{ _best_mutex };
                    if (edges.size() > _best.load() || (_best_edges.empty() && edges.size() == _best.load())) {
                        _best_edges = edges;
                        _best.store(edges.size());
                    }
                }

                auto budget_exhausted() -> bool
                {
                    if (_out_of_budget.load(std::memory_order_relaxed))
                        return true;
                    if (_cfg.max_nodes != 0 && _nodes.load(std::memory_order_relaxed) >= _cfg.max_nodes)
                        _out_of_budget = true;
                    else if (_cfg.time_budget > 0.0 && std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count() > _cfg.time_budget)
                        _out_of_budget = true;
                    return _out_of_budget.load();
                }

                auto upper_bound(const vector<Edge> & edges, size_t addable) const -> size_t
                {
                    auto m = static_cast<long long>(edges.size());
                    long long ub = static_cast<long long>(addable);
                    if (_linear) {
                        ub = std::min(ub, (binomial2(_n) - 3 * m) / 3);
                        vector<int> degree(_n, 0);
                        for (auto & e : edges)
                            for (auto v : e.vertices())
                                ++degree[v];
                        long long slots = 0;
                        for (int v = 0 ; v < _n ; ++v)
                            slots += (_n - 1 - 2 * degree[v]) / 2;
                        ub = std::min(ub, slots / 3);
                    }
                    return size_t(std::max(ub, 0LL));
                }

                auto key_of(const vector<Edge> & edges) const -> string
                {
                    vector<int> ids;
                    for (auto & e : edges)
                        ids.push_back(_triple_index(e));
                    std::sort(ids.begin(), ids.end());
                    string key;
                    for (auto i : ids)
                        key.append(reinterpret_cast<const char *>(&i), sizeof(i));
                    return key;
                }

                auto expand(const Node & node, vector<pair<string, Node>> & out) -> void
                {
                    ++_nodes;
                    GrowingHypergraph g{ _n };
                    for (auto & e : node.edges)
                        g.push(e);

                    vector<int> addable;
                    for (auto c : node.candidates)
                        if (g.try_add(_triples[c], _forbidden)) {
                            addable.push_back(c);
                            g.pop();
                        }

                    if (node.edges.size() + upper_bound(node.edges, addable.size()) <= _best.load(std::memory_order_relaxed)) {
                        ++_prunes;
                        return;
                    }

                    for (auto t : addable) {
                        Node child;
                        child.edges = node.edges;
                        child.edges.push_back(_triples[t]);
                        for (auto c : addable)
                            if (c != t)
                                child.candidates.push_back(c);

                        string key;
                        if (_cfg.symmetry_pruning) {
                            auto lab = canonical_labelling(_n, child.edges);
                            key = std::move(lab.form);
                            for (auto & e : child.edges)
                                e = Edge{ lab.label[e[0]], lab.label[e[1]], lab.label[e[2]] };
                            std::sort(child.edges.begin(), child.edges.end());
                            for (auto & c : child.candidates) {
                                auto & tr = _triples[c];
                                c = _triple_index(Edge{ lab.label[tr[0]], lab.label[tr[1]], lab.label[tr[2]] });
                            }
                            std::sort(child.candidates.begin(), child.candidates.end());
                        }
                        else
                            key = key_of(child.edges);
                        out.emplace_back(std::move(key), std::move(child));
                    }
                }

            public:
                ExtremalSearch(int n, SearchMode mode, int s, int k, const SearchConfig & cfg) :
                    _n(n),
                    _mode(mode),
                    _s(s),
                    _k(k),
                    _cfg(cfg),
                    _forbidden(forbidden_pairs(mode, s, k)),
                    _triples(all_triples(n)),
                    _triple_index(n),
                    _linear(false)
                {
                    for (auto [fs, fk] : _forbidden)
                        if (fk == 2 && fs >= 4)
                            _linear = true;
                }

                auto run() -> SearchRecord
                {
                    _start = std::chrono::steady_clock::now();

                    if (_cfg.initial_witness) {
                        auto & w = *_cfg.initial_witness;
                        if (w.vertex_count() != _n || w.multi_allowed() || ! is_free(w, _forbidden))
                            throw ConfigurationError{ "initial witness is not a free hypergraph on " + to_string(_n) + " vertices" };
                        offer(w.edges());
                    }
                    for (uint64_t seed = 1 ; seed <= 8 ; ++seed) {
                        std::mt19937_64 rng{ seed };
                        GrowingHypergraph g{ _n };
                        greedy_complete(g, _n, _forbidden, rng);
                        offer(g.edges());
                    }

                    Node root;
                    for (int i = 0 ; i < int(_triples.size()) ; ++i)
                        root.candidates.push_back(i);
                    vector<Node> level;
                    level.push_back(std::move(root));

                    unsigned threads = std::max(1u, _cfg.threads);
                    while (! level.empty() && ! _out_of_budget) {
                        vector<vector<pair<string, Node>>> produced(threads);
                        std::atomic<size_t> cursor{ 0 };
                        auto worker = [&] (unsigned id) {
                            while (true) {
                                auto i = cursor++;
                                if (i >= level.size() || budget_exhausted())
                                    break;
                                expand(level[i], produced[id]);
                            }
                        };
                        if (threads == 1)
                            worker(0);
                        else {
                            vector<std::thread> pool;
                            for (unsigned t = 0 ; t < threads ; ++t)
                                pool.emplace_back(worker, t);
                            for (auto & t : pool)
                                t.join();
                        }

                        // merge the per-worker outputs at the level boundary
                        std::unordered_set<string> seen;
                        vector<Node> next;
                        for (auto & chunk : produced)
                            for (auto & [key, node] : chunk) {
                                if (! seen.insert(key).second) {
                                    ++_duplicates;
                                    continue;
                                }
                                next.push_back(std::move(node));
                            }
                        if (! next.empty())
                            offer(next.front().edges);
                        level = std::move(next);
                    }

                    SearchRecord record;
                    record.n = _n;
                    record.s = _s;
                    record.k = _k;
                    record.mode = _mode;
                    record.value = _best.load();
                    record.exact = ! _out_of_budget.load();
                    record.witness = Hypergraph{ _n, _best_edges }.canonicalized();
                    record.stats.nodes = _nodes.load();
                    record.stats.bound_prunes = _prunes.load();
                    record.stats.duplicates = _duplicates.load();
                    record.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();

                    if (record.witness.edge_count() != record.value || ! is_free(record.witness, _forbidden))
                        throw std::logic_error{ "extremal witness failed independent verification" };
                    return record;
                }
        };

        auto validate_search(int n, int s, int k, const SearchConfig & cfg) -> void
        {
            if (n < 3)
                throw ConfigurationError{ "n must be at least 3, got " + to_string(n) };
            if (n > cfg.max_n)
                throw ConfigurationError{ "n = " + to_string(n) + " exceeds the configured search limit " + to_string(cfg.max_n) };
            if (k < 2)
                throw ConfigurationError{ "k must be at least 2, got " + to_string(k) };
            if (s < 3)
                throw ConfigurationError{ "s must be at least 3, got " + to_string(s) };
        }
    }

    auto mode_name(SearchMode m) -> string
    {
        return m == SearchMode::f ? "f" : "g";
    }

    auto parse_mode(const string & s) -> SearchMode
    {
        if (s == "f")
            return SearchMode::f;
        if (s == "g")
            return SearchMode::g;
        throw ConfigurationError{ "unknown mode '" + s + "', expected f or g" };
    }

    auto forbidden_pairs(SearchMode mode, int s, int k) -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result{ { s, k } };
        if (mode == SearchMode::g)
            for (auto p : g_forbidden(k, false))
                result.push_back(p);
        return result;
    }

    auto all_triples(int n) -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex a = 0 ; a < n ; ++a)
            for (Vertex b = a + 1 ; b < n ; ++b)
                for (Vertex c = b + 1 ; c < n ; ++c)
                    result.emplace_back(a, b, c);
        return result;
    }

    auto compute_f(int n, int s, int k, const SearchConfig & cfg) -> SearchRecord
    {
        validate_search(n, s, k, cfg);
        return ExtremalSearch{ n, SearchMode::f, s, k, cfg }.run();
    }

    auto compute_g(int n, int k, const SearchConfig & cfg) -> SearchRecord
    {
        validate_search(n, k + 2, k, cfg);
        return ExtremalSearch{ n, SearchMode::g, k + 2, k, cfg }.run();
    }

    auto search_record_to_json(const SearchRecord & r) -> nlohmann::json
    {
        return {
            { "mode", mode_name(r.mode) }, { "n", r.n }, { "s", r.s }, { "k", r.k },
            { "value", r.value }, { "exact", r.exact },
            { "witness", hypergraph_to_json(r.witness) },
            { "stats", { { "nodes", r.stats.nodes }, { "bound_prunes", r.stats.bound_prunes },
                         { "duplicates", r.stats.duplicates }, { "seconds", r.stats.seconds } } }
        };
    }

    auto search_record_from_json(const nlohmann::json & j) -> SearchRecord
    {
        SearchRecord r;
        r.mode = parse_mode(j.at("mode").get<string>());
        r.n = j.at("n").get<int>();
        r.s = j.at("s").get<int>();
        r.k = j.at("k").get<int>();
        r.value = j.at("value").get<size_t>();
        r.exact = j.at("exact").get<bool>();
        r.witness = hypergraph_from_json(j.at("witness"));
        if (j.contains("stats")) {
            auto & st = j.at("stats");
            r.stats.nodes = st.value("nodes", 0ULL);
            r.stats.bound_prunes = st.value("bound_prunes", 0ULL);
            r.stats.duplicates = st.value("duplicates", 0ULL);
            r.stats.seconds = st.value("seconds", 0.0);
        }
        return r;
    }

    auto gen_random_free(int n, int k, SearchMode mode, uint64_t seed) -> Hypergraph
    {
        if (k < 2)
            throw ConfigurationError{ "k must be at least 2, got " + to_string(k) };
        Hypergraph probe{ n, { } };
        std::mt19937_64 rng{ seed };
        GrowingHypergraph g{ n };
        greedy_complete(g, n, forbidden_pairs(mode, k + 2, k), rng);
        return Hypergraph{ n, g.edges() }.canonicalized();
    }

    auto gen_planted_free(int n, int k, uint64_t seed, int clusters) -> Hypergraph
    {
        if (k < 3)
            throw ConfigurationError{ "planted corpora need k >= 3, got " + to_string(k) };
        if (n < 6)
            throw ConfigurationError{ "planted corpora need n >= 6" };

        std::mt19937_64 rng{ seed };
        GrowingHypergraph g{ n };
        vector<pair<int, int>> forbidden{ { k + 2, k } };
        bool multi = (k == 3);

        vector<Vertex> vertices(n);
        for (int v = 0 ; v < n ; ++v)
            vertices[v] = v;

        for (int c = 0 ; c < clusters ; ++c) {
            shuffle(vertices, rng);
            if (multi) {
                Edge e{ vertices[0], vertices[1], vertices[2] };
                if (g.try_add(e, forbidden) && ! g.try_add(e, forbidden))
                    g.pop();
            }
            else {
                int l = 3 + int(uniform_below(rng, uint64_t(k - 3)));
                if (l + 1 > n)
                    continue;
                auto inside = all_triples(l + 1);
                shuffle(inside, rng);
                for (int i = 0 ; i < l ; ++i) {
                    auto & t = inside[i];
                    Edge e{ vertices[t[0]], vertices[t[1]], vertices[t[2]] };
                    if (std::find(g.edges().begin(), g.edges().end(), e) == g.edges().end())
                        g.try_add(e, forbidden);
                }
            }
        }

        auto triples = all_triples(n);
        shuffle(triples, rng);
        for (auto & t : triples) {
            if (std::find(g.edges().begin(), g.edges().end(), t) != g.edges().end())
                continue;
            g.try_add(t, forbidden);
        }
        return Hypergraph{ n, g.edges(), multi }.canonicalized();
    }

    auto bose_steiner_triple_system(int n) -> Hypergraph
    {
        if (n % 3 != 0 || (n / 3) % 2 == 0)
            throw ConfigurationError{ "Bose construction needs n = 3m with m odd, got " + to_string(n) };
        int m = n / 3;
        int half = (m + 1) / 2;
        auto label = [m] (int x, int layer) { return x + m * layer; };

        vector<Edge> edges;
        for (int x = 0 ; x < m ; ++x)
            edges.emplace_back(label(x, 0), label(x, 1), label(x, 2));
        for (int x = 0 ; x < m ; ++x)
            for (int y = x + 1 ; y < m ; ++y) {
                int z = ((x + y) * half) % m;
                for (int layer = 0 ; layer < 3 ; ++layer)
                    edges.emplace_back(label(x, layer), label(y, layer), label(z, (layer + 1) % 3));
            }
        return Hypergraph{ n, std::move(edges) }.canonicalized();
    }

    auto reference_limit(int k) -> optional<Rational>
    {
        switch (k) {
            case 2: return Rational(1, 6);
            case 3: return Rational(1, 5);
            case 4: return Rational(7, 36);
            default: return std::nullopt;
        }
    }

    auto ratio_table(int k, int n_from, int n_to, SearchMode mode, const SearchConfig & cfg, ResultsCache * cache) -> RatioTable
    {
        RatioTable table;
        table.k = k;
        table.mode = mode;
        table.reference_limit = reference_limit(k);
        for (int n = n_from ; n <= n_to ; ++n) {
            optional<SearchRecord> record;
            if (cache)
                record = cache->lookup(mode, n, k + 2, k);
            if (! record || ! record->exact) {
                record = (mode == SearchMode::f) ? compute_f(n, k + 2, k, cfg) : compute_g(n, k, cfg);
                if (cache)
                    cache->store(*record);
            }
            table.rows.push_back(RatioRow{ n, record->value, record->exact,
                    Rational(static_cast<long long>(record->value), static_cast<long long>(n) * n) });
        }
        return table;
    }

    auto ratio_table_csv(const RatioTable & t) -> string
    {
        std::ostringstream out;
        out << "# k=" << t.k << " mode=" << mode_name(t.mode) << " s=k+2\n";
        if (t.reference_limit)
            out << "# reference limit of value/n^2 as n grows: " << t.reference_limit->numerator() << "/" << t.reference_limit->denominator() << "\n";
        out << "n,value,exact,ratio,ratio_decimal\n";
        for (auto & r : t.rows)
            out << r.n << "," << r.value << "," << (r.exact ? "true" : "false") << ","
                << r.ratio.numerator() << "/" << r.ratio.denominator() << ","
                << boost::rational_cast<double>(r.ratio) << "\n";
        return out.str();
    }

    auto ratio_table_json(const RatioTable & t) -> nlohmann::json
    {
        auto rows = nlohmann::json::array();
        for (auto & r : t.rows)
            rows.push_back({ { "n", r.n }, { "value", r.value }, { "exact", r.exact },
                    { "ratio_num", r.ratio.numerator() }, { "ratio_den", r.ratio.denominator() },
                    { "ratio", boost::rational_cast<double>(r.ratio) } });
        nlohmann::json j = { { "k", t.k }, { "mode", mode_name(t.mode) }, { "rows", rows } };
        if (t.reference_limit)
            j["reference_limit"] = { { "num", t.reference_limit->numerator() }, { "den", t.reference_limit->denominator() } };
        else
            j["reference_limit"] = nullptr;
        return j;
    }

    ResultsCache::ResultsCache(std::filesystem::path path) :
        _path(std::move(path))
    {
        std::ifstream in{ _path };
        if (in) {
            try {
                _data = nlohmann::json::parse(in);
            }
            catch (const nlohmann::json::exception & e) {
                throw HypergraphError{ "unreadable results cache " + _path.string() + ": " + e.what() };
            }
            if (! _data.is_object())
                throw HypergraphError{ "results cache " + _path.string() + " is not a JSON object" };
        }
    }

    auto ResultsCache::default_path() -> std::filesystem::path
    {
        if (auto env = std::getenv("CONFIGLAB_CACHE"); env && *env)
            return env;
        return "configlab_cache.json";
    }

    auto ResultsCache::key(SearchMode mode, int n, int s, int k) -> string
    {
        return mode_name(mode) + ":" + to_string(n) + ":" + to_string(s) + ":" + to_string(k);
    }

    auto ResultsCache::lookup(SearchMode mode, int n, int s, int k) const -> optional<SearchRecord>
    {
        auto it = _data.find(key(mode, n, s, k));
        if (it == _data.end())
            return std::nullopt;
        return search_record_from_json(*it);
    }

    auto ResultsCache::store(const SearchRecord & r) -> void
    {
        auto k = key(r.mode, r.n, r.s, r.k);
        auto existing = _data.find(k);
        if (existing != _data.end() && existing->at("exact").get<bool>() && ! r.exact)
            return;
        _data[k] = search_record_to_json(r);
    }

    auto ResultsCache::save() const -> void
    {
        std::ofstream out{ _path };
        if (! out)
            throw HypergraphError{ "cannot write results cache " + _path.string() };
        out << _data.dump(2) << "\n";
    }
}
