#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symdef {

using Vertex = std::size_t;
/// Sorted, duplicate-free list of 0-based vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (first < second), deduplicated and sorted
/// ascending. Adjacency is kept as one 64-bit mask per vertex, which bounds
/// the vertex count at 64.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  explicit Graph(std::size_t num_vertices = 0);
  /// Throws InputError on loops, out-of-range endpoints or duplicate edges.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t neighbor_mask(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  std::size_t degree(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::uint64_t mask);

/// Proper 2-coloring (color 0/1 per vertex) if one exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);
VertexSet neighbors_of_set(const Graph& g, const VertexSet& s);
/// Induced subgraph on s, reindexed in ascending order of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);

/// Upper bound on vertices for the exhaustive odd-cycle routines.
inline constexpr std::size_t kOddCycleVertexBudget = 16;

/// Vertex sets of all simple odd cycles. Throws ResourceLimit above the budget.
std::vector<std::uint64_t> odd_cycle_vertex_sets(const Graph& g,
                                                 std::size_t budget = kOddCycleVertexBudget);
bool has_odd_cycle(const Graph& g, std::size_t budget = kOddCycleVertexBudget);
/// True iff every vertex lies on or next to every odd cycle.
bool every_vertex_adjacent_to_every_odd_cycle(const Graph& g,
                                              std::size_t budget = kOddCycleVertexBudget);

// Families. Vertex numbering follows the usual drawings: cycle edges are
// {i, i+1 mod n}; triangle_tail(n) puts the triangle on 0,1,2 and the tail
// y_1..y_n on 3..n+2 with y_1 attached to vertex 2.
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
/// Path on `vertices` vertices (vertices - 1 edges).
Graph path(std::size_t vertices);
Graph triangle_tail(std::size_t tail);
/// Triangle with one pendant vertex on each corner (x1,x2,x3,y1,y2,y3 -> 0..5).
Graph net();
/// Two triangles sharing vertex 2: edges 01, 02, 12, 23, 24, 34.
Graph butterfly();
/// Four-cycle 0-1-2-3 with the chord 1-3.
Graph diamond();
/// k triangles sharing the hub vertex 0.
Graph friendship(std::size_t k);

/// Parses "K5", "C7", "P4", "T3", "F3" or one of "net", "butterfly", "diamond".
Graph graph_from_family(const std::string& name);

/// Canonical labelling key: equal for two graphs iff they are isomorphic.
std::vector<std::uint64_t> canonical_form(const Graph& g);
/// One representative per isomorphism class on exactly n vertices (n <= 7).
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n, bool connected_only);

std::string to_string(const Graph& g);

}  // namespace symdef
