#pragma once

// Randomized and exhaustive property checks shared by the unit tests and the
// acceptance runner. Each check returns a tally instead of asserting so the
// caller decides how to report.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symdef/cover_ideal.hpp"
#include "symdef/graph.hpp"
#include "symdef/monomial.hpp"
#include "symdef/monomial_ideal.hpp"

namespace props {

using symdef::Monomial;
using symdef::MonomialIdeal;

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Monomial::Exponent> exps(n);
  for (auto& x : exps) x = e(rng);
  return Monomial(std::move(exps));
}

inline std::vector<Monomial> random_gens(std::mt19937_64& rng, std::size_t n, unsigned max_gens,
                                         unsigned max_exp) {
  std::uniform_int_distribution<unsigned> count(0, max_gens);
  std::vector<Monomial> gens(count(rng));
  for (auto& g : gens) g = random_monomial(rng, n, max_exp);
  return gens;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, unsigned max_gens,
                                  unsigned max_exp) {
  return MonomialIdeal::minimalize(n, random_gens(rng, n, max_gens, max_exp));
}

inline symdef::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<symdef::Edge> edges;
  for (symdef::Vertex u = 0; u < n; ++u) {
    for (symdef::Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return symdef::Graph(n, std::move(edges));
}

/// Every exponent vector in n variables with total degree <= d.
inline std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> exps(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.emplace_back(exps);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
    exps[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

inline unsigned max_degree(const MonomialIdeal& a) {
  unsigned d = 0;
  for (const auto& g : a.generators()) d = std::max<unsigned>(d, g.degree());
  return d;
}

/// Minimalization, sum, intersection, power and equality laws on random
/// ideals in at most three variables.
inline Tally monomial_laws(std::uint64_t seed, unsigned cases) {
  std::mt19937_64 rng(seed);
  Tally t;
  std::uniform_int_distribution<std::size_t> nvars(1, 3);
  std::uniform_int_distribution<unsigned> small(0, 2);
  for (unsigned c = 0; c < cases; ++c) {
    const std::size_t n = nvars(rng);
    auto gens = random_gens(rng, n, 5, 3);
    const auto tag = " (case " + std::to_string(c) + ")";

    const MonomialIdeal a = MonomialIdeal::minimalize(n, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    t.check(MonomialIdeal::minimalize(n, gens) == a, "minimalize order-sensitive" + tag);
    const auto again = std::vector<Monomial>(a.generators().begin(), a.generators().end());
    t.check(MonomialIdeal::minimalize(n, again) == a, "minimalize not idempotent" + tag);

    const MonomialIdeal b = random_ideal(rng, n, 4, 3);
    const MonomialIdeal sum = add(a, b);
    const MonomialIdeal meet = intersect(a, b);
    const unsigned grid = std::max({max_degree(a), max_degree(b), max_degree(meet)}) + 1;
    bool sum_ok = true;
    bool meet_ok = true;
    for (const auto& m : monomials_up_to_degree(n, grid)) {
      const bool in_a = contains(a, m);
      const bool in_b = contains(b, m);
      sum_ok = sum_ok && contains(sum, m) == (in_a || in_b);
      meet_ok = meet_ok && contains(meet, m) == (in_a && in_b);
    }
    t.check(sum_ok, "sum membership" + tag);
    t.check(meet_ok, "intersection membership" + tag);

    const unsigned p = small(rng);
    const unsigned q = small(rng);
    t.check(power(a, p + q) == multiply(power(a, p), power(a, q)), "power law" + tag);

    // An equal ideal from redundant generators, and an unrelated one.
    std::vector<Monomial> padded = again;
    for (const auto& g : a.generators()) padded.push_back(g * random_monomial(rng, n, 1));
    std::shuffle(padded.begin(), padded.end(), rng);
    for (const MonomialIdeal& other : {MonomialIdeal::minimalize(n, padded), b}) {
      const unsigned d = std::max(max_degree(a), max_degree(other)) + 1;
      bool same = true;
      for (const auto& m : monomials_up_to_degree(n, d)) {
        same = same && contains(a, m) == contains(other, m);
      }
      t.check((a == other) == same, "equality disagrees with membership" + tag);
    }
  }
  return t;
}

/// If f times F/(x_a x_b) lies in J^(m) for all a, b, then f lies in J^(m).
inline Tally lemma_drop_two_variables(std::uint64_t seed, unsigned cases,
                                      std::uint64_t* premise_hits = nullptr) {
  std::mt19937_64 rng(seed);
  Tally t;
  std::uniform_int_distribution<std::size_t> nvars(2, 6);
  std::uniform_int_distribution<unsigned> mdist(1, 4);
  std::uint64_t hits = 0;
  for (unsigned c = 0; c < cases; ++c) {
    const std::size_t n = nvars(rng);
    const symdef::Graph g = random_graph(rng, n, 0.5);
    const unsigned m = mdist(rng);
    const Monomial f = random_monomial(rng, n, m);
    const MonomialIdeal sym = symdef::symbolic_power(g, m);
    bool premise = true;
    for (std::size_t a = 0; a < n && premise; ++a) {
      for (std::size_t b = a + 1; b < n && premise; ++b) {
        std::vector<Monomial::Exponent> rest(n, 1);
        rest[a] = rest[b] = 0;
        premise = contains(sym, f * Monomial(rest));
      }
    }
    if (!premise) continue;
    ++hits;
    t.check(contains(sym, f), "f*F/(x_a x_b) in J^(m) for all a,b but f is not: " +
                                  symdef::to_string(f) + " on " + symdef::to_string(g));
  }
  if (premise_hits) *premise_hits = hits;
  return t;
}

/// J^m is contained in J^(m) for every connected graph on up to max_n vertices.
inline Tally power_in_symbolic_power(std::size_t max_n, unsigned max_m) {
  Tally t;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& g : symdef::graphs_up_to_isomorphism(n, true)) {
      const symdef::CoverIdealCache cache(g);
      for (unsigned m = 1; m <= max_m; ++m) {
        t.check(is_subideal(cache.ordinary(m), cache.symbolic(m)),
                "J^m not in J^(m) for m=" + std::to_string(m) + " on " + symdef::to_string(g));
      }
    }
  }
  return t;
}

}  // namespace props
