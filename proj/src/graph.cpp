#include "symdef/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "symdef/errors.hpp"

namespace symdef {

Graph::Graph(std::size_t num_vertices) : n_(num_vertices), adj_(num_vertices, 0) {
  if (n_ > kMaxVertices) throw InputError("graphs are limited to 64 vertices");
}

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges) : Graph(num_vertices) {
  for (auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

std::size_t Graph::degree(Vertex v) const { return std::popcount(adj_[v]); }

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t mask = 0;
  for (auto v : s) mask |= std::uint64_t{1} << v;
  return mask;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : from_mask(g.neighbor_mask(u))) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          frontier.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

VertexSet neighbors_of_set(const Graph& g, const VertexSet& s) {
  std::uint64_t mask = 0;
  for (auto v : s) mask |= g.neighbor_mask(v);
  return from_mask(mask);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> index(g.num_vertices(), g.num_vertices());
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] < s.size() && index[v] < s.size()) edges.emplace_back(index[u], index[v]);
  }
  return Graph(s.size(), std::move(edges));
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.neighbor_mask(v) == 0) return true;
  }
  return false;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Vertex v : from_mask(frontier)) next |= g.neighbor_mask(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(n);
}

std::vector<std::uint64_t> odd_cycle_vertex_sets(const Graph& g, std::size_t budget) {
  const std::size_t n = g.num_vertices();
  if (n > budget) {
    throw ResourceLimit("graph with " + std::to_string(n) +
                        " vertices is too large for exhaustive odd-cycle check (budget " +
                        std::to_string(budget) + ")");
  }
  // paths[mask] holds the end vertices of simple paths that start at the
  // lowest vertex of mask and visit exactly the vertices of mask.
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint32_t> paths(full, 0);
  for (Vertex v = 0; v < n; ++v) paths[std::size_t{1} << v] = std::uint32_t{1} << v;

  std::vector<std::uint64_t> out;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::uint32_t ends = paths[mask];
    if (ends == 0) continue;
    const auto low = static_cast<Vertex>(std::countr_zero(mask));
    const std::uint64_t start_nbrs = g.neighbor_mask(low);
    const int size = std::popcount(mask);
    if (size >= 3 && size % 2 == 1 && (ends & start_nbrs) != 0) out.push_back(mask);
    for (Vertex v : from_mask(ends)) {
      std::uint64_t ext = g.neighbor_mask(v) & ~static_cast<std::uint64_t>(mask);
      ext &= ~((std::uint64_t{1} << (low + 1)) - 1);
      for (Vertex w : from_mask(ext)) {
        paths[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return out;
}

bool has_odd_cycle(const Graph& g, std::size_t budget) {
  return !odd_cycle_vertex_sets(g, budget).empty();
}

bool every_vertex_adjacent_to_every_odd_cycle(const Graph& g, std::size_t budget) {
  const std::size_t n = g.num_vertices();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t cyc : odd_cycle_vertex_sets(g, budget)) {
    std::uint64_t reach = cyc;
    for (Vertex v : from_mask(cyc)) reach |= g.neighbor_mask(v);
    if (reach != all) return false;
  }
  return true;
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path(std::size_t vertices) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return Graph(vertices, std::move(edges));
}

Graph triangle_tail(std::size_t tail) {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  if (tail > 0) edges.emplace_back(2, 3);
  for (Vertex i = 3; i + 1 < 3 + tail; ++i) edges.emplace_back(i, i + 1);
  return Graph(3 + tail, std::move(edges));
}

Graph net() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph butterfly() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph diamond() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}); }

Graph friendship(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < k; ++t) {
    Vertex a = 1 + 2 * t;
    edges.emplace_back(0, a);
    edges.emplace_back(0, a + 1);
    edges.emplace_back(a, a + 1);
  }
  return Graph(1 + 2 * k, std::move(edges));
}

Graph graph_from_family(const std::string& name) {
  if (name == "net") return net();
  if (name == "butterfly") return butterfly();
  if (name == "diamond") return diamond();
  if (name.size() < 2 || !std::isdigit(static_cast<unsigned char>(name[1]))) {
    throw InputError("unknown graph family '" + name + "'");
  }
  std::size_t k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])) || k > 1000) {
      throw InputError("bad family size in '" + name + "'");
    }
    k = k * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  switch (name[0]) {
    case 'K':
      return complete(k);
    case 'C':
      return cycle(k);
    case 'P':
      return path(k);
    case 'T':
      return triangle_tail(k);
    case 'F':
      return friendship(k);
    default:
      throw InputError("unknown graph family '" + name + "'");
  }
}

namespace {

// Isomorphism-invariant vertex label used to restrict the permutation search.
std::vector<std::size_t> vertex_label(const Graph& g, Vertex v) {
  std::vector<std::size_t> label{g.degree(v)};
  std::vector<std::size_t> nbr;
  for (Vertex w : from_mask(g.neighbor_mask(v))) nbr.push_back(g.degree(w));
  std::sort(nbr.begin(), nbr.end());
  label.insert(label.end(), nbr.begin(), nbr.end());
  return label;
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = vertex_label(g, v);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return labels[a] < labels[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && labels[order[j]] == labels[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint64_t> best;
  std::vector<Vertex> position(n);
  auto evaluate = [&] {
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::uint64_t> rows(n + 1, 0);
    rows[0] = n;
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex w : from_mask(g.neighbor_mask(order[i]))) {
        rows[i + 1] |= std::uint64_t{1} << position[w];
      }
    }
    if (best.empty() || rows < best) best = std::move(rows);
  };
  // Odometer over per-block permutations.
  for (auto& [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);
  while (true) {
    evaluate();
    std::size_t k = blocks.size();
    while (k > 0) {
      auto [b, e] = blocks[k - 1];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      --k;
    }
    if (k == 0) break;
  }
  if (n == 0) best = {0};
  return best;
}

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n, bool connected_only) {
  if (n > 7) throw ResourceLimit("isomorphism-class enumeration is limited to 7 vertices");
  std::vector<Graph> level{Graph(0)};
  for (std::size_t size = 1; size <= n; ++size) {
    std::map<std::vector<std::uint64_t>, Graph> classes;
    const Vertex fresh = size - 1;
    for (const auto& base : level) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << fresh); ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for (Vertex w : from_mask(nbrs)) edges.emplace_back(w, fresh);
        Graph g(size, std::move(edges));
        classes.try_emplace(canonical_form(g), g);
      }
    }
    level.clear();
    for (auto& [key, g] : classes) level.push_back(std::move(g));
  }
  if (connected_only) {
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  }
  return level;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.num_vertices() << ", edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ", ";
    first = false;
    os << '{' << u + 1 << ',' << v + 1 << '}';
  }
  os << "])";
  return os.str();
}

}  // namespace symdef
