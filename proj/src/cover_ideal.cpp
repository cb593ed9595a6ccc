#include "symdef/cover_ideal.hpp"

#include <algorithm>

#include "symdef/errors.hpp"

namespace symdef {

MonomialIdeal edge_ideal_power(std::size_t num_vars, Vertex u, Vertex v, unsigned m) {
  std::vector<Monomial> gens;
  gens.reserve(m + 1);
  for (unsigned a = 0; a <= m; ++a) {
    std::vector<Monomial::Exponent> exps(num_vars, 0);
    exps[u] = a;
    exps[v] = m - a;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::minimalize(num_vars, std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) { return symbolic_power(g, 1); }

MonomialIdeal symbolic_power(const Graph& g, unsigned m, std::size_t max_gens) {
  const std::size_t n = g.num_vertices();
  MonomialIdeal acc = MonomialIdeal::unit(n);
  if (m == 0) return acc;
  for (const auto& [u, v] : g.edges()) {
    acc = intersect(acc, edge_ideal_power(n, u, v, m), max_gens);
  }
  return acc;
}

bool is_m_cover(const Graph& g, const Monomial& f, unsigned m) {
  if (f.num_vars() != g.num_vertices()) throw DimensionMismatch("monomial/graph size mismatch");
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return std::uint64_t{f[e.first]} + f[e.second] >= m;
  });
}

namespace {

// Smallest exponent vertex v may carry given its neighbors' exponents.
std::uint64_t required_exponent(const Graph& g, std::span<const Monomial::Exponent> a, Vertex v,
                                unsigned m) {
  std::uint64_t need = 0;
  for (Vertex w : from_mask(g.neighbor_mask(v))) {
    if (a[w] < m) need = std::max<std::uint64_t>(need, m - a[w]);
  }
  return need;
}

}  // namespace

bool is_minimal_m_cover(const Graph& g, const Monomial& f, unsigned m) {
  if (!is_m_cover(g, f, m)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (f[v] != required_exponent(g, f.exponents(), v, m)) return false;
  }
  return true;
}

std::vector<Monomial> minimal_mcovers(const Graph& g, unsigned m) {
  const std::size_t n = g.num_vertices();
  // A vertex is settled once it and all its neighbors are assigned; at that
  // point its exponent must equal the least value its edges demand.
  std::vector<std::vector<Vertex>> settles_at(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex last = v;
    for (Vertex w : from_mask(g.neighbor_mask(v))) last = std::max(last, w);
    settles_at[last].push_back(v);
  }

  std::vector<Monomial::Exponent> a(n, 0);
  std::vector<Monomial> out;
  auto search = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      out.emplace_back(a);
      return;
    }
    for (unsigned e = 0; e <= m; ++e) {
      a[v] = e;
      bool ok = true;
      for (Vertex w : from_mask(g.neighbor_mask(v))) {
        if (w < v && a[w] + e < m) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (Vertex u : settles_at[v]) {
          if (a[u] != required_exponent(g, a, u, m)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) self(self, v + 1);
    }
    a[v] = 0;
  };
  if (n == 0) return {Monomial(0)};
  search(search, 0);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

Cover2Classification classify_indecomposable_2cover(const Graph& g, const Monomial& f) {
  using Kind = Cover2Classification::Kind;
  Cover2Classification out;
  if (f.num_vars() != g.num_vertices()) throw DimensionMismatch("monomial/graph size mismatch");
  if (f.max_exponent() > 2) {
    out.reason = "exponent above 2";
    return out;
  }
  if (!is_minimal_m_cover(g, f, 2)) {
    throw PreconditionError(to_string(f) + " is not a minimal vertex 2-cover");
  }
  if (is_bipartite(g)) {
    out.reason = "graph is bipartite";
    return out;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (f[v] == 0 ? out.zero_set : f[v] == 2 ? out.two_set : out.one_set).push_back(v);
  }
  if (out.zero_set.empty() && out.two_set.empty()) {
    out.kind = Kind::AllOnes;
    return out;
  }
  if (neighbors_of_set(g, out.zero_set) != out.two_set) {
    out.reason = "exponent-2 set is not the neighborhood of the exponent-0 set";
    return out;
  }
  const Monomial two_support = Monomial::squarefree(g.num_vertices(), out.two_set);
  if (is_m_cover(g, two_support, 1)) {
    out.reason = "exponent-2 set is a vertex cover";
    return out;
  }
  if (out.one_set.empty()) {
    out.reason = "no exponent-1 vertices";
    return out;
  }
  const Graph core = induced_subgraph(g, out.one_set);
  if (has_isolated_vertex(core)) {
    out.reason = "exponent-1 subgraph has an isolated vertex";
    return out;
  }
  if (is_bipartite(core)) {
    out.reason = "exponent-1 subgraph is bipartite";
    return out;
  }
  out.kind = Kind::SZT;
  return out;
}

std::string to_string(Cover2Classification::Kind kind) {
  switch (kind) {
    case Cover2Classification::Kind::AllOnes:
      return "all_ones";
    case Cover2Classification::Kind::SZT:
      return "szt";
    case Cover2Classification::Kind::NotIndecomposable:
      break;
  }
  return "not_indecomposable";
}

CoverIdealCache::CoverIdealCache(Graph g, ResourceCaps caps, std::string name)
    : graph_(std::move(g)),
      name_(name.empty() ? to_string(graph_) : std::move(name)),
      caps_(caps),
      cover_(symbolic_power(graph_, 1, caps_.max_gens)),
      all_ones_(Monomial::all_ones(graph_.num_vertices())) {}

namespace {

void check_power_cap(unsigned m, const ResourceCaps& caps) {
  if (m > caps.max_m) {
    throw ResourceLimit("power " + std::to_string(m) + " exceeds cap " +
                        std::to_string(caps.max_m));
  }
}

}  // namespace

const MonomialIdeal& CoverIdealCache::symbolic(unsigned m) const {
  check_power_cap(m, caps_);
  {
    std::shared_lock lock(mutex_);
    if (auto it = symbolic_.find(m); it != symbolic_.end()) return it->second;
  }
  MonomialIdeal value = symbolic_power(graph_, m, caps_.max_gens);
  std::unique_lock lock(mutex_);
  return symbolic_.try_emplace(m, std::move(value)).first->second;
}

const MonomialIdeal& CoverIdealCache::ordinary(unsigned m) const {
  check_power_cap(m, caps_);
  {
    std::shared_lock lock(mutex_);
    if (auto it = ordinary_.find(m); it != ordinary_.end()) return it->second;
  }
  MonomialIdeal value = m == 0 ? MonomialIdeal::unit(graph_.num_vertices())
                               : multiply(ordinary(m - 1), cover_, caps_.max_gens);
  std::unique_lock lock(mutex_);
  return ordinary_.try_emplace(m, std::move(value)).first->second;
}

}  // namespace symdef
