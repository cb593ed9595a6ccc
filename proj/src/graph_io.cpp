#include "symdef/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "symdef/errors.hpp"

namespace symdef {

Graph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InputError("graph JSON needs \"n\" and \"edges\"");
  }
  const auto& n_field = doc.at("n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 0) {
    throw InputError("\"n\" must be a nonnegative integer");
  }
  const auto n = static_cast<std::size_t>(n_field.get<long long>());
  const auto& edge_field = doc.at("edges");
  if (!edge_field.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : edge_field) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError("each edge must be a pair of integers");
    }
    const long long u = e[0].get<long long>();
    const long long v = e[1].get<long long>();
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n) {
      throw InputError("edge endpoint outside 1.." + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return Graph(n, std::move(edges));
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid graph JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

}  // namespace symdef
