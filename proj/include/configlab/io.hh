#pragma once

#include <configlab/hypergraph.hh>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace configlab
{
    /// Parses the text format: a header line "n m [multi]" followed by m lines
    /// of three vertex ids. Blank lines and lines starting with '#' are ignored.
    [[nodiscard]] auto read_hypergraph(std::string_view text) -> Hypergraph;

    /// Writes the text format, edges in stored order.
    [[nodiscard]] auto write_hypergraph(const Hypergraph & h) -> std::string;

    [[nodiscard]] auto hypergraph_to_json(const Hypergraph & h) -> nlohmann::json;
    [[nodiscard]] auto hypergraph_from_json(const nlohmann::json & j) -> Hypergraph;

    /// Reads a file in either format; JSON is recognised by a leading '{'.
    [[nodiscard]] auto load_hypergraph(const std::filesystem::path & path) -> Hypergraph;

    /// Writes the canonical text form.
    auto save_hypergraph(const std::filesystem::path & path, const Hypergraph & h) -> void;

    [[nodiscard]] auto vertex_set_to_json(const VertexSet & vs) -> nlohmann::json;
}
