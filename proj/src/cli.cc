#include <configlab/cli.hh>
#include <configlab/configs.hh>
#include <configlab/extremal.hh>
#include <configlab/io.hh>
#include <configlab/shadowbound.hh>
#include <configlab/sparsifier.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

using std::optional;
using std::ostream;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace fs = std::filesystem;

namespace configlab
{
    namespace
    {
        /// Raised for bad flags, unreadable files and the like: exit code 2.
        class UsageError :
            public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        auto join(const vector<Vertex> & vs) -> string
        {
            string result;
            for (auto v : vs)
                result += (result.empty() ? "" : " ") + to_string(v);
            return result;
        }

        auto join(const vector<size_t> & is) -> string
        {
            string result;
            for (auto i : is)
                result += (result.empty() ? "" : " ") + to_string(i);
            return result;
        }

        /// Key/value lines with the keys padded to a common width.
        class TextTable
        {
            private:
                vector<std::pair<string, string>> _rows;

            public:
                auto add(string key, string value) -> TextTable &
                {
                    _rows.emplace_back(std::move(key), std::move(value));
                    return *this;
                }

                auto print(ostream & out) const -> void
                {
                    size_t width = 0;
                    for (auto & [k, v] : _rows)
                        width = std::max(width, k.size());
                    for (auto & [k, v] : _rows)
                        out << std::left << std::setw(int(width) + 2) << k << v << "\n";
                }
        };

        auto yes_no(bool b) -> string { return b ? "yes" : "no"; }

        auto load_input(const string & path) -> Hypergraph
        {
            try {
                return load_hypergraph(path);
            }
            catch (const HypergraphError & e) {
                throw UsageError{ path + ": " + e.what() };
            }
        }

        auto describe(const Configuration & c, int s) -> string
        {
            return "(" + to_string(s) + "," + to_string(c.ell) + ") edges {" + join(c.edges.indices())
                + "} spanning {" + join(c.vertices.members()) + "}";
        }

        /// Independent confirmation that a reported witness really is one.
        auto confirm_witness(const Hypergraph & h, const Configuration & c, int s) -> void
        {
            auto again = make_configuration(h, c.edges);
            if (! again.witnesses(s, c.ell))
                throw std::logic_error{ "reported witness does not re-verify" };
        }

        auto check_k(int k) -> void
        {
            if (k < 2)
                throw UsageError{ "--k must be at least 2" };
        }

        struct Common
        {
            string format = "text";

            auto json() const -> bool { return format == "json"; }
        };

        auto add_format(CLI::App * cmd, Common & common) -> void
        {
            cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({ "text", "json" }));
        }

        auto cmd_check_free(const string & input, int k, const string & mode_text, const Common & common, ostream & out) -> int
        {
            check_k(k);
            auto mode = parse_mode(mode_text);
            auto h = load_input(input);
            auto report = freeness_report(h, k);
            bool free = (mode == SearchMode::f) ? report.is_f_free : report.is_g_free;

            if (free) {
                if (! (mode == SearchMode::f ? is_f_free(h, k) : is_g_free(h, k)))
                    throw std::logic_error{ "freeness claim does not re-verify" };
            }
            else
                confirm_witness(h, *report.first_violation, report.violation_s);

            if (common.json()) {
                auto j = freeness_report_to_json(report);
                j["mode"] = mode_name(mode);
                j["free"] = free;
                out << j.dump(2) << "\n";
            }
            else {
                TextTable t;
                t.add("vertices", to_string(h.vertex_count())).add("edges", to_string(h.edge_count()))
                    .add("k", to_string(k)).add("mode", mode_name(mode))
                    .add("f-free", yes_no(report.is_f_free)).add("g-free", yes_no(report.is_g_free));
                if (! free)
                    t.add("witness", describe(*report.first_violation, report.violation_s));
                t.print(out);
            }
            return free ? exit_ok : exit_violation;
        }

        auto print_not_free(const NotFreeError & e, const Common & common, ostream & out) -> int
        {
            if (common.json())
                out << nlohmann::json{ { "error", e.what() }, { "s", e.s() }, { "witness", configuration_to_json(e.witness()) } }.dump(2) << "\n";
            else
                TextTable{}.add("error", e.what()).add("witness", describe(e.witness(), e.s())).print(out);
            return exit_violation;
        }

        auto cmd_extract(const string & input, int k, const string & trace_path, const string & output, const Common & common, ostream & out) -> int
        {
            check_k(k);
            auto h = load_input(input);
            Extraction extraction;
            try {
                extraction = extract_free_subgraph(h, k);
            }
            catch (const NotFreeError & e) {
                confirm_witness(h, e.witness(), e.s());
                return print_not_free(e, common, out);
            }

            auto & trace = extraction.trace;
            if (! is_g_free(extraction.result, k) || ! trace.aggregate_holds())
                throw std::logic_error{ "extraction result does not re-verify" };
            for (auto & step : trace.steps)
                if (! step.verdicts.all() || Rational(static_cast<long long>(step.loss)) > step.loss_bound)
                    throw std::logic_error{ "extraction step does not re-verify" };

            if (! trace_path.empty()) {
                std::ofstream f{ trace_path };
                if (! f)
                    throw UsageError{ "cannot write " + trace_path };
                f << trace_to_json_lines(trace);
            }
            if (! output.empty()) {
                try {
                    save_hypergraph(output, extraction.result);
                }
                catch (const HypergraphError & e) {
                    throw UsageError{ e.what() };
                }
            }

            if (common.json()) {
                auto j = trace_summary_json(trace);
                if (output.empty())
                    j["result"] = hypergraph_to_json(extraction.result.canonicalized());
                out << j.dump(2) << "\n";
            }
            else {
                TextTable t;
                t.add("steps", to_string(trace.steps.size()))
                    .add("vertices", to_string(trace.initial_vertices) + " -> " + to_string(trace.final_vertices))
                    .add("edges", to_string(trace.initial_edges) + " -> " + to_string(trace.final_edges))
                    .add("loss", to_string(trace.total_loss()))
                    .add("aggregate bound", to_string(trace.aggregate_bound.numerator()) + "/" + to_string(trace.aggregate_bound.denominator()))
                    .add("g-free", "yes");
                t.print(out);
                if (output.empty())
                    out << write_hypergraph(extraction.result.canonicalized());
            }
            return exit_ok;
        }

        struct CorpusItem
        {
            string name;
            optional<Hypergraph> graph;
        };

        auto load_corpus(const string & corpus, int k) -> vector<CorpusItem>
        {
            vector<CorpusItem> items;
            if (fs::is_directory(corpus)) {
                vector<fs::path> files;
                for (auto & entry : fs::directory_iterator(corpus))
                    if (entry.is_regular_file())
                        files.push_back(entry.path());
                std::sort(files.begin(), files.end());
                for (auto & f : files)
                    items.push_back({ f.string(), load_input(f.string()) });
                return items;
            }

            // generator spec n,count,seed
            int n = 0, count = 0;
            unsigned long long seed = 0;
            char c1 = 0, c2 = 0;
            std::istringstream in{ corpus };
            if (! (in >> n >> c1 >> count >> c2 >> seed) || c1 != ',' || c2 != ',' || (in >> std::ws, ! in.eof()))
                throw UsageError{ "corpus '" + corpus + "' is neither a directory nor a generator spec n,count,seed" };
            if (n < 3 || n > max_vertices || count < 0)
                throw UsageError{ "bad generator spec '" + corpus + "'" };
            for (int i = 0 ; i < count ; ++i) {
                auto s = seed + i;
                bool planted = (i % 2 == 1) && k >= 3 && n >= 6;
                items.push_back({ (planted ? "planted:" : "random:") + to_string(n) + ":" + to_string(s),
                        planted ? gen_planted_free(n, k, s, 1 + n / 8) : gen_random_free(n, k, SearchMode::f, s) });
            }
            return items;
        }

        struct LemmaTally
        {
            size_t graphs = 0, non_free = 0, failures = 0;
            size_t steps = 0, structural_checks = 0, step_bounds = 0, aggregate_bounds = 0;
            size_t components = 0, component_claims = 0, edge_bounds = 0;
            vector<nlohmann::json> problems;
        };

        auto cmd_verify_lemmas(const string & corpus, int k, const Common & common, ostream & out, ostream & err) -> int
        {
            check_k(k);
            auto items = load_corpus(corpus, k);
            LemmaTally tally;

            for (auto & item : items) {
                ++tally.graphs;
                auto & h = *item.graph;
                try {
                    auto extraction = extract_free_subgraph(h, k);
                    for (auto & step : extraction.trace.steps) {
                        ++tally.steps;
                        auto & v = step.verdicts;
                        tally.structural_checks += v.inside_at_most_k_minus_1 + v.none_meet_in_two + v.outside_pairs_distinct + v.link_is_small_forest;
                        if (Rational(static_cast<long long>(step.loss)) <= step.loss_bound)
                            ++tally.step_bounds;
                    }
                    if (extraction.trace.aggregate_holds())
                        ++tally.aggregate_bounds;

                    auto & g = extraction.result;
                    auto report = verify_component_claims(g, k);
                    tally.components += report.components.size();
                    tally.component_claims += 3 * report.components.size() + 1;
                    auto bound = edge_bound_check(g, k);
                    if (! bound.holds || ! squared_density_bound_holds(static_cast<long long>(g.edge_count()), g.vertex_count(), k))
                        throw SparsifierError{ "edge bound violated on the extracted subgraph" };
                    ++tally.edge_bounds;
                }
                catch (const NotFreeError & e) {
                    confirm_witness(h, e.witness(), e.s());
                    ++tally.non_free;
                    tally.problems.push_back({ { "input", item.name }, { "error", "not free" },
                            { "s", e.s() }, { "witness", configuration_to_json(e.witness()) } });
                    err << item.name << ": not (" << k + 2 << "," << k << ")-free, witness " << describe(e.witness(), e.s()) << "\n";
                }
                catch (const SparsifierError & e) {
                    ++tally.failures;
                    tally.problems.push_back({ { "input", item.name }, { "error", e.what() } });
                    err << item.name << ": " << e.what() << "\n";
                }
            }

            if (items.empty())
                err << "warning: corpus is empty, nothing was checked\n";

            if (common.json()) {
                nlohmann::json j = {
                    { "k", k }, { "graphs", tally.graphs }, { "non_free", tally.non_free }, { "failures", tally.failures },
                    { "steps", tally.steps }, { "structural_checks", tally.structural_checks },
                    { "step_bounds", tally.step_bounds }, { "aggregate_bounds", tally.aggregate_bounds },
                    { "components", tally.components }, { "component_claims", tally.component_claims },
                    { "edge_bounds", tally.edge_bounds }, { "problems", tally.problems }
                };
                out << j.dump(2) << "\n";
            }
            else {
                TextTable t;
                t.add("graphs", to_string(tally.graphs)).add("non-free inputs", to_string(tally.non_free))
                    .add("failures", to_string(tally.failures)).add("extraction steps", to_string(tally.steps))
                    .add("structural checks", to_string(tally.structural_checks))
                    .add("step bounds", to_string(tally.step_bounds)).add("aggregate bounds", to_string(tally.aggregate_bounds))
                    .add("components", to_string(tally.components)).add("component claims", to_string(tally.component_claims))
                    .add("edge bounds", to_string(tally.edge_bounds));
                t.print(out);
            }
            return (tally.non_free + tally.failures == 0) ? exit_ok : exit_violation;
        }

        struct SearchOptions
        {
            int n = 0, s = 0, k = 0, max_n = 10;
            string mode = "f";
            unsigned long long budget_nodes = 0;
            double budget_secs = 0.0;
            unsigned threads = 1;
            bool no_symmetry = false;
            bool no_cache = false;
        };

        auto add_search_options(CLI::App * cmd, SearchOptions & o) -> void
        {
            cmd->add_option("--mode", o.mode, "f or g")->check(CLI::IsMember({ "f", "g" }));
            cmd->add_option("--budget-nodes", o.budget_nodes, "node budget, 0 for none");
            cmd->add_option("--budget-secs", o.budget_secs, "time budget in seconds, 0 for none");
            cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
            cmd->add_option("--max-n", o.max_n, "refuse searches above this n");
            cmd->add_flag("--no-symmetry", o.no_symmetry, "disable isomorphism pruning");
            cmd->add_flag("--no-cache", o.no_cache, "neither read nor write the results cache");
        }

        auto search_config(const SearchOptions & o) -> SearchConfig
        {
            SearchConfig cfg;
            cfg.max_nodes = o.budget_nodes;
            cfg.time_budget = o.budget_secs;
            cfg.threads = o.threads;
            cfg.symmetry_pruning = ! o.no_symmetry;
            cfg.max_n = o.max_n;
            return cfg;
        }

        /// Independent check of a search record's witness.
        auto confirm_record(const SearchRecord & r) -> void
        {
            auto & w = r.witness;
            bool ok = w.vertex_count() == r.n && w.edge_count() == r.value && ! find_configuration(w, r.s, r.k);
            if (ok && r.mode == SearchMode::g)
                ok = is_g_free(w, r.k);
            if (! ok)
                throw std::logic_error{ "search witness does not re-verify" };
        }

        auto open_cache(const SearchOptions & o) -> optional<ResultsCache>
        {
            if (o.no_cache)
                return std::nullopt;
            try {
                return ResultsCache{ ResultsCache::default_path() };
            }
            catch (const HypergraphError & e) {
                throw UsageError{ e.what() };
            }
        }

        auto save_cache(const optional<ResultsCache> & cache) -> void
        {
            if (! cache)
                return;
            try {
                cache->save();
            }
            catch (const HypergraphError & e) {
                throw UsageError{ e.what() };
            }
        }

        auto cmd_search_extremal(SearchOptions o, const Common & common, ostream & out) -> int
        {
            check_k(o.k);
            auto mode = parse_mode(o.mode);
            if (o.s == 0)
                o.s = o.k + 2;
            if (mode == SearchMode::g && o.s != o.k + 2)
                throw UsageError{ "mode g fixes s = k+2" };

            auto cache = open_cache(o);
            optional<SearchRecord> record;
            bool cached = false;
            if (cache) {
                record = cache->lookup(mode, o.n, o.s, o.k);
                cached = record && record->exact;
            }
            if (! cached) {
                try {
                    auto cfg = search_config(o);
                    record = (mode == SearchMode::f) ? compute_f(o.n, o.s, o.k, cfg) : compute_g(o.n, o.k, cfg);
                }
                catch (const ConfigurationError & e) {
                    throw UsageError{ e.what() };
                }
                if (cache)
                    cache->store(*record);
            }
            confirm_record(*record);
            save_cache(cache);

            if (common.json()) {
                auto j = search_record_to_json(*record);
                j["cached"] = cached;
                out << j.dump(2) << "\n";
            }
            else {
                out << record->value << "\n";
                TextTable t;
                t.add("function", mode_name(mode) + "(" + to_string(o.n) + "," + to_string(o.s) + "," + to_string(o.k) + ")")
                    .add("exact", yes_no(record->exact)).add("cached", yes_no(cached))
                    .add("nodes", to_string(record->stats.nodes));
                t.print(out);
                out << write_hypergraph(record->witness);
            }
            return exit_ok;
        }

        auto parse_range(const string & text) -> std::pair<int, int>
        {
            auto dots = text.find("..");
            try {
                if (dots == string::npos) {
                    int n = std::stoi(text);
                    return { n, n };
                }
                return { std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2)) };
            }
            catch (const std::exception &) {
                throw UsageError{ "--n expects a or a..b, got '" + text + "'" };
            }
        }

        auto cmd_ratio_table(const string & range, SearchOptions o, const Common & common, ostream & out) -> int
        {
            check_k(o.k);
            auto mode = parse_mode(o.mode);
            auto [from, to] = parse_range(range);
            if (from < 3 || to < from)
                throw UsageError{ "bad range " + range };

            // the table always goes through a cache so every row's witness can be re-checked
            auto cache = open_cache(o);
            auto scratch = cache ? std::move(cache) : optional<ResultsCache>{ ResultsCache{ fs::path{} } };
            RatioTable table;
            try {
                table = ratio_table(o.k, from, to, mode, search_config(o), &*scratch);
            }
            catch (const ConfigurationError & e) {
                throw UsageError{ e.what() };
            }
            for (auto & row : table.rows) {
                auto r = scratch->lookup(mode, row.n, o.k + 2, o.k);
                if (! r || r->value != row.value)
                    throw std::logic_error{ "ratio table row is missing from the cache" };
                confirm_record(*r);
            }
            if (! o.no_cache)
                save_cache(scratch);

            if (common.json())
                out << ratio_table_json(table).dump(2) << "\n";
            else
                out << ratio_table_csv(table);
            return exit_ok;
        }

        auto cmd_gen_random(int n, int k, const string & mode_text, unsigned long long seed, const string & output, const Common & common, ostream & out) -> int
        {
            check_k(k);
            auto mode = parse_mode(mode_text);
            if (n < 3 || n > max_vertices)
                throw UsageError{ "--n must lie in [3, " + to_string(max_vertices) + "]" };
            auto h = gen_random_free(n, k, mode, seed);

            bool ok = (mode == SearchMode::f) ? is_f_free(h, k) : is_g_free(h, k);
            if (! ok)
                throw std::logic_error{ "generated hypergraph failed its self-check" };

            if (! output.empty()) {
                try {
                    save_hypergraph(output, h);
                    ok = load_hypergraph(output) == h;
                }
                catch (const HypergraphError & e) {
                    throw UsageError{ e.what() };
                }
                if (! ok)
                    throw std::logic_error{ "written file does not read back identically" };
            }

            if (common.json()) {
                nlohmann::json j = { { "n", n }, { "k", k }, { "mode", mode_name(mode) }, { "seed", seed },
                    { "edges", h.edge_count() }, { "self_check", true } };
                if (output.empty())
                    j["hypergraph"] = hypergraph_to_json(h);
                else
                    j["output"] = output;
                out << j.dump(2) << "\n";
            }
            else if (output.empty())
                out << write_hypergraph(h);
            else
                TextTable{}.add("output", output).add("edges", to_string(h.edge_count())).add("self-check", "passed").print(out);
            return exit_ok;
        }
    }

    auto run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "configuration-free 3-uniform hypergraphs", "configlab" };
        app.require_subcommand(1);
        Common common;

        string input, output, trace, mode = "f", corpus, range;
        int k = 0, n = 0;
        unsigned long long seed = 0;
        SearchOptions search;

        auto check = app.add_subcommand("check-free", "test a hypergraph for forbidden configurations");
        check->add_option("--input", input, "hypergraph file")->required();
        check->add_option("--k", k)->required();
        check->add_option("--mode", mode, "f or g")->check(CLI::IsMember({ "f", "g" }));
        add_format(check, common);

        auto extract = app.add_subcommand("extract", "delete k-maximal configurations until g-free");
        extract->add_option("--input", input, "hypergraph file")->required();
        extract->add_option("--k", k)->required();
        extract->add_option("--trace", trace, "write the step trace as JSON lines");
        extract->add_option("--output", output, "write the result here");
        add_format(extract, common);

        auto verify = app.add_subcommand("verify-lemmas", "run every structural check over a corpus");
        verify->add_option("--corpus", corpus, "directory, or generator spec n,count,seed")->required();
        verify->add_option("--k", k)->required();
        add_format(verify, common);

        auto extremal = app.add_subcommand("search-extremal", "exact extremal value with a witness");
        extremal->add_option("--n", search.n)->required();
        extremal->add_option("--s", search.s, "defaults to k+2");
        extremal->add_option("--k", search.k)->required();
        add_search_options(extremal, search);
        add_format(extremal, common);

        auto ratios = app.add_subcommand("ratio-table", "value/n^2 over a range of n, as CSV");
        ratios->add_option("--k", search.k)->required();
        ratios->add_option("--n", range, "a..b")->required();
        add_search_options(ratios, search);
        add_format(ratios, common);

        auto gen = app.add_subcommand("gen-random", "seeded random greedy free hypergraph");
        gen->add_option("--n", n)->required();
        gen->add_option("--k", k)->required();
        gen->add_option("--mode", mode, "f or g")->required()->check(CLI::IsMember({ "f", "g" }));
        gen->add_option("--seed", seed)->required();
        gen->add_option("--output", output);
        add_format(gen, common);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (*check)
                return cmd_check_free(input, k, mode, common, out);
            if (*extract)
                return cmd_extract(input, k, trace, output, common, out);
            if (*verify)
                return cmd_verify_lemmas(corpus, k, common, out, err);
            if (*extremal)
                return cmd_search_extremal(search, common, out);
            if (*ratios)
                return cmd_ratio_table(range, search, common, out);
            if (*gen)
                return cmd_gen_random(n, k, mode, seed, output, common, out);
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const NotFreeError & e) {
            err << "error: " << e.what() << "\n";
            return exit_violation;
        }
        catch (const SparsifierError & e) {
            err << "violation: " << e.what() << "\n";
            return exit_violation;
        }
        catch (const HypergraphError & e) {
            err << "error: " << e.what() << "\n";
            return exit_usage;
        }
        catch (const std::logic_error & e) {
            err << "internal check failed: " << e.what() << "\n";
            return exit_violation;
        }
        return exit_usage;
    }
}
