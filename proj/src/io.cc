#include <configlab/io.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace configlab
{
    namespace
    {
        auto parse_int(const string & token, int line_no) -> long long
        {
            size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || token.empty())
                throw HypergraphError{ "line " + to_string(line_no) + ": expected an integer, got '" + token + "'" };
            return value;
        }

        auto tokens_of(const string & line) -> vector<string>
        {
            std::istringstream in{ line };
            vector<string> result;
            string t;
            while (in >> t)
                result.push_back(t);
            return result;
        }
    }

    auto read_hypergraph(string_view text) -> Hypergraph
    {
        std::istringstream in{ string{ text } };
        string line;
        int line_no = 0;

        auto next_content_line = [&] (vector<string> & toks) -> bool {
            while (std::getline(in, line)) {
                ++line_no;
                toks = tokens_of(line);
                if (toks.empty() || toks.front().starts_with('#'))
                    continue;
                return true;
            }
            return false;
        };

        vector<string> toks;
        if (! next_content_line(toks))
            throw HypergraphError{ "empty input: missing header line" };

        if (toks.size() < 2 || toks.size() > 3)
            throw HypergraphError{ "line " + to_string(line_no) + ": header must be 'n m' or 'n m multi'" };
        auto n = parse_int(toks[0], line_no);
        auto m = parse_int(toks[1], line_no);
        bool multi = false;
        if (toks.size() == 3) {
            if (toks[2] != "multi")
                throw HypergraphError{ "line " + to_string(line_no) + ": unknown header token '" + toks[2] + "'" };
            multi = true;
        }
        if (n < 0 || m < 0)
            throw HypergraphError{ "line " + to_string(line_no) + ": negative count in header" };
        if (n > max_vertices)
            throw HypergraphError{ "vertex count " + to_string(n) + " exceeds the supported maximum of " + to_string(max_vertices) };

        vector<Edge> edges;
        edges.reserve(m);
        for (long long i = 0 ; i < m ; ++i) {
            if (! next_content_line(toks))
                throw HypergraphError{ "expected " + to_string(m) + " edge lines, found " + to_string(i) };
            if (toks.size() != 3)
                throw HypergraphError{ "line " + to_string(line_no) + ": an edge needs exactly 3 vertex ids" };
            std::array<long long, 3> v{ parse_int(toks[0], line_no), parse_int(toks[1], line_no), parse_int(toks[2], line_no) };
            for (auto x : v)
                if (x < 0 || x >= n)
                    throw HypergraphError{ "line " + to_string(line_no) + ": vertex " + to_string(x) + " out of range [0," + to_string(n) + ")" };
            try {
                edges.emplace_back(Vertex(v[0]), Vertex(v[1]), Vertex(v[2]));
            }
            catch (const HypergraphError & e) {
                throw HypergraphError{ "line " + to_string(line_no) + ": " + e.what() };
            }
        }

        if (next_content_line(toks))
            throw HypergraphError{ "line " + to_string(line_no) + ": trailing content after " + to_string(m) + " edges" };

        return Hypergraph{ int(n), std::move(edges), multi };
    }

    auto write_hypergraph(const Hypergraph & h) -> string
    {
        string result = to_string(h.vertex_count()) + " " + to_string(h.edge_count());
        if (h.multi_allowed())
            result += " multi";
        result += '\n';
        for (auto & e : h.edges())
            result += to_string(e[0]) + " " + to_string(e[1]) + " " + to_string(e[2]) + "\n";
        return result;
    }

    auto hypergraph_to_json(const Hypergraph & h) -> nlohmann::json
    {
        auto edges = nlohmann::json::array();
        for (auto & e : h.edges())
            edges.push_back({ e[0], e[1], e[2] });
        return { { "n", h.vertex_count() }, { "edges", edges }, { "multi", h.multi_allowed() } };
    }

    auto hypergraph_from_json(const nlohmann::json & j) -> Hypergraph
    {
        try {
            int n = j.at("n").get<int>();
            bool multi = j.contains("multi") ? j.at("multi").get<bool>() : false;
            vector<Edge> edges;
            for (auto & e : j.at("edges")) {
                if (! e.is_array() || e.size() != 3)
                    throw HypergraphError{ "JSON edge must be an array of 3 vertex ids" };
                edges.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
            }
            return Hypergraph{ n, std::move(edges), multi };
        }
        catch (const nlohmann::json::exception & e) {
            throw HypergraphError{ string{ "malformed hypergraph JSON: " } + e.what() };
        }
    }

    auto load_hypergraph(const std::filesystem::path & path) -> Hypergraph
    {
        std::ifstream in{ path };
        if (! in)
            throw HypergraphError{ "cannot open " + path.string() };
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto text = buffer.str();

        auto first = text.find_first_not_of(" \t\r\n");
        if (first != string::npos && text[first] == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            }
            catch (const nlohmann::json::exception & e) {
                throw HypergraphError{ path.string() + ": " + e.what() };
            }
            return hypergraph_from_json(j);
        }
        return read_hypergraph(text);
    }

    auto save_hypergraph(const std::filesystem::path & path, const Hypergraph & h) -> void
    {
        std::ofstream out{ path };
        if (! out)
            throw HypergraphError{ "cannot write " + path.string() };
        out << write_hypergraph(h.canonicalized());
    }

    auto vertex_set_to_json(const VertexSet & vs) -> nlohmann::json
    {
        return vs.members();
    }
}
