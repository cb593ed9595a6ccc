#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "symdef/graph.hpp"
#include "symdef/monomial_ideal.hpp"

namespace symdef {

/// Caps applied to every symbolic-defect computation.
struct ResourceCaps {
  std::size_t max_gens = 200000;
  unsigned max_m = 12;
};

/// (x_u, x_v)^m, generated by x_u^a x_v^(m-a) for 0 <= a <= m.
MonomialIdeal edge_ideal_power(std::size_t num_vars, Vertex u, Vertex v, unsigned m);

/// J(G), the intersection of (x_i, x_j) over all edges. Its minimal generators
/// are the minimal vertex covers. An edgeless graph gives the unit ideal.
MonomialIdeal cover_ideal(const Graph& g);

/// J(G)^(m), the intersection of (x_i, x_j)^m over all edges in ascending order.
MonomialIdeal symbolic_power(const Graph& g, unsigned m,
                             std::size_t max_gens = kUnlimitedGenerators);

bool is_m_cover(const Graph& g, const Monomial& f, unsigned m);
/// An m-cover from which no single exponent can be lowered.
bool is_minimal_m_cover(const Graph& g, const Monomial& f, unsigned m);

/// Minimal vertex m-covers found by direct search over exponent vectors,
/// independent of the ideal-intersection route. Returned in canonical order.
std::vector<Monomial> minimal_mcovers(const Graph& g, unsigned m);

/// Shape of an indecomposable minimal vertex 2-cover.
struct Cover2Classification {
  enum class Kind { NotIndecomposable, AllOnes, SZT };

  Kind kind = Kind::NotIndecomposable;
  VertexSet zero_set;  // exponent 0
  VertexSet two_set;   // exponent 2
  VertexSet one_set;   // exponent 1
  /// For NotIndecomposable, the structural condition that failed.
  std::string reason;

  bool indecomposable() const { return kind != Kind::NotIndecomposable; }
};

/// Structural classification of a minimal 2-cover f of G: either the product
/// of all variables on a non-bipartite graph, or an (S, T, U) split where T is
/// the neighborhood of S, T is not a cover, and U induces a non-bipartite
/// graph without isolated vertices. Throws PreconditionError if f is not a
/// minimal 2-cover.
Cover2Classification classify_indecomposable_2cover(const Graph& g, const Monomial& f);

std::string to_string(Cover2Classification::Kind kind);

/// Per-graph memo of symbolic and ordinary powers of the cover ideal.
///
/// Lookups take a shared lock; filling a missing entry takes the exclusive
/// lock. Entries are never evicted, so returned references stay valid for the
/// lifetime of the cache.
class CoverIdealCache {
 public:
  explicit CoverIdealCache(Graph g, ResourceCaps caps = {}, std::string name = {});

  const Graph& graph() const { return graph_; }
  /// Label used in reports; defaults to the edge list.
  const std::string& name() const { return name_; }
  const ResourceCaps& caps() const { return caps_; }
  const MonomialIdeal& cover() const { return cover_; }
  const Monomial& all_ones() const { return all_ones_; }

  const MonomialIdeal& symbolic(unsigned m) const;
  const MonomialIdeal& ordinary(unsigned m) const;

 private:
  Graph graph_;
  std::string name_;
  ResourceCaps caps_;
  MonomialIdeal cover_;
  Monomial all_ones_;
  mutable std::shared_mutex mutex_;
  mutable std::map<unsigned, MonomialIdeal> symbolic_;
  mutable std::map<unsigned, MonomialIdeal> ordinary_;
};

}  // namespace symdef
