#pragma once

#include <string>

#include <json.hpp>

#include "symdef/graph.hpp"

namespace symdef {

/// Reads {"n": <int>, "edges": [[i, j], ...]} with 1-based vertex indices.
/// Throws InputError on malformed documents.
Graph graph_from_json(const nlohmann::json& doc);
Graph parse_graph_json(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Inverse of graph_from_json (1-based indices, edges in ascending order).
nlohmann::json graph_to_json(const Graph& g);

}  // namespace symdef
