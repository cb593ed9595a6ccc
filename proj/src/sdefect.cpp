#include "symdef/sdefect.hpp"

#include <algorithm>
#include <set>

#include "symdef/errors.hpp"

namespace symdef {

std::string to_string(SdefectMethod method) {
  switch (method) {
    case SdefectMethod::Brute:
      return "brute";
    case SdefectMethod::Recursion:
      return "recursion";
    case SdefectMethod::Cycle:
      return "cycle";
    case SdefectMethod::ClosedForm:
      return "closed_form";
  }
  return "unknown";
}

std::string to_string(IndecomposabilityCertificate::Condition c) {
  using C = IndecomposabilityCertificate::Condition;
  switch (c) {
    case C::EquigeneratedLowF:
      return "cond1";
    case C::SeparatingVariable:
      return "cond2";
    case C::SeparatingBlock:
      return "cond3";
    case C::None:
      break;
  }
  return "none";
}

SdefectReport sdefect_brute(const CoverIdealCache& cache, unsigned m) {
  if (m < 1) throw PreconditionError("sdefect requires m >= 1");
  SdefectReport report;
  report.graph_id = cache.name();
  report.m = m;
  report.method = SdefectMethod::Brute;
  const MonomialIdeal& symbolic = cache.symbolic(m);
  const MonomialIdeal& ordinary = cache.ordinary(m);
  for (const auto& g : symbolic.generators()) {
    if (!contains(ordinary, g)) report.witnesses.push_back(g);
  }
  report.value = report.witnesses.size();
  return report;
}

std::uint64_t nu(const MonomialIdeal& ideal, unsigned m, const Monomial& f,
                 std::size_t max_gens) {
  const MonomialIdeal p = power(ideal, m, max_gens);
  return static_cast<std::uint64_t>(
      std::count_if(p.generators().begin(), p.generators().end(),
                    [&](const Monomial& g) { return !divides(f, g); }));
}

namespace {

std::uint64_t nu_cached(const CoverIdealCache& cache, unsigned m) {
  const MonomialIdeal& p = cache.ordinary(m);
  return static_cast<std::uint64_t>(
      std::count_if(p.generators().begin(), p.generators().end(),
                    [&](const Monomial& g) { return !divides(cache.all_ones(), g); }));
}

}  // namespace

IndecomposabilityCertificate check_indecomposability_conditions(const MonomialIdeal& cover) {
  using C = IndecomposabilityCertificate::Condition;
  IndecomposabilityCertificate cert;
  const std::size_t n = cover.num_vars();
  cert.f_degree = n;
  if (cover.is_zero()) return cert;
  for (const auto& g : cover.generators()) {
    if (cert.generator_degrees.empty() || cert.generator_degrees.back() != g.degree()) {
      cert.generator_degrees.push_back(g.degree());
    }
  }
  const auto& degrees = cert.generator_degrees;
  if (degrees.size() == 1) {
    if (n < 2 * degrees[0]) cert.condition = C::EquigeneratedLowF;
    return cert;
  }
  if (degrees.size() != 2 || n >= degrees[0] + degrees[1]) return cert;

  // Per variable: divides every low-degree generator / none of them, and the
  // same for the high-degree generators.
  std::vector<bool> all_low(n, true), none_low(n, true), all_high(n, true), none_high(n, true);
  for (const auto& g : cover.generators()) {
    const bool low = g.degree() == degrees[0];
    for (std::size_t j = 0; j < n; ++j) {
      const bool has = g[j] != 0;
      auto& all = low ? all_low : all_high;
      auto& none = low ? none_low : none_high;
      if (!has) all[j] = false;
      if (has) none[j] = false;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (all_low[j] && none_high[j]) cert.witness_vars.push_back(j);
  }
  if (!cert.witness_vars.empty()) {
    cert.condition = C::SeparatingVariable;
    return cert;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (all_high[j] && none_low[j]) cert.witness_vars.push_back(j);
  }
  if (degrees[1] - degrees[0] <= cert.witness_vars.size()) {
    cert.condition = C::SeparatingBlock;
  } else {
    cert.witness_vars.clear();
  }
  return cert;
}

std::optional<std::vector<Monomial>> factor_in_power(const MonomialIdeal& ideal,
                                                     const Monomial& q, unsigned r) {
  auto gens = ideal.generators();
  if (gens.empty()) return std::nullopt;
  const std::uint64_t min_degree = gens.front().degree();
  std::vector<Monomial> chosen;
  auto search = [&](auto&& self, const Monomial& rest, std::size_t from, unsigned left) -> bool {
    if (left == 0) return true;
    if (rest.degree() < left * min_degree) return false;
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (!divides(gens[i], rest)) continue;
      chosen.push_back(gens[i]);
      if (self(self, quotient(rest, gens[i]), i, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, q, 0, r)) return chosen;
  return std::nullopt;
}

ExhaustiveResult check_indecomposability_exhaustive(const CoverIdealCache& cache,
                                                    const ExhaustiveBounds& bounds) {
  ExhaustiveResult result;
  const MonomialIdeal& cover = cache.cover();
  if (cover.is_zero()) return result;
  std::vector<Monomial> factors;
  const std::uint64_t alpha_cover = alpha(cover);
  for (const auto& g : cover.generators()) {
    if (!bounds.min_degree_only || g.degree() == alpha_cover) factors.push_back(g);
  }

  std::set<std::pair<unsigned, std::vector<Monomial::Exponent>>> seen;
  for (unsigned k = 1; k <= bounds.k_max; ++k) {
    const Monomial f_power = pow(cache.all_ones(), k);
    for (unsigned s = 0; s <= bounds.s_max; ++s) {
      const unsigned target = 2 * k + s;
      if (target > bounds.max_power) break;
      if (s > 0 && factors.empty()) break;
      // Multisets of s factors as nondecreasing index sequences.
      std::vector<std::size_t> idx(s, 0);
      while (true) {
        Monomial product = f_power;
        for (auto i : idx) product = product * factors[i];
        auto key = std::make_pair(
            target, std::vector<Monomial::Exponent>(product.exponents().begin(),
                                                    product.exponents().end()));
        if (seen.insert(std::move(key)).second) {
          ++result.products_checked;
          if (auto decomposition = factor_in_power(cover, product, target)) {
            DecompositionCounterexample cx;
            cx.k = k;
            for (auto i : idx) cx.factors.push_back(factors[i]);
            cx.product = product;
            cx.decomposition = std::move(*decomposition);
            result.holds = false;
            result.counterexample = std::move(cx);
            return result;
          }
        }
        // Advance the multiset odometer.
        std::size_t pos = s;
        while (pos > 0 && idx[pos - 1] + 1 == factors.size()) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < s; ++j) idx[j] = idx[pos - 1];
      }
    }
  }
  return result;
}

namespace {

// Returns an empty string when every hypothesis holds, else a description of
// the first one that fails.
std::string recursion_hypothesis_failure(const CoverIdealCache& cache, unsigned m) {
  const auto second = sdefect_brute(cache, 2);
  if (second.value != 1) {
    return "sdefect(J,2) = " + std::to_string(second.value) + ", recursion needs 1";
  }
  if (check_indecomposability_conditions(cache.cover()).holds()) return {};
  ExhaustiveBounds bounds;
  bounds.k_max = m / 2;
  bounds.s_max = m >= 2 ? m - 2 : 0;
  bounds.max_power = m;
  const auto search = check_indecomposability_exhaustive(cache, bounds);
  if (!search.holds) {
    const auto& cx = *search.counterexample;
    std::string factors;
    for (const auto& g : cx.factors) factors += "*" + to_string(g);
    return "Indecomposability Property fails: F^" + std::to_string(cx.k) + factors +
           " lies in J^" + std::to_string(2 * cx.k + cx.factors.size());
  }
  return {};
}

}  // namespace

SdefectReport sdefect_recursive(const CoverIdealCache& cache, unsigned m,
                                RecursionOptions options) {
  if (m < 1) throw PreconditionError("sdefect requires m >= 1");
  SdefectReport report;
  report.graph_id = cache.name();
  report.m = m;
  report.method = SdefectMethod::Recursion;
  const std::string failure = recursion_hypothesis_failure(cache, m);
  if (!failure.empty()) {
    if (options.enforce_hypotheses) throw PreconditionError("recursion refused: " + failure);
    report.hypotheses_verified = false;
    report.note = failure;
  }
  std::uint64_t value = m % 2 == 0 ? 1 : 0;
  for (unsigned level = m % 2 == 0 ? 4 : 3; level <= m; level += 2) {
    value += nu_cached(cache, level - 2);
  }
  report.value = value;
  return report;
}

MonomialIdeal cycle_staircase_ideal(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("staircase ideal needs an odd cycle length");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> vars;
    for (std::size_t step = 0; step < n; step += 2) vars.push_back((i + step) % n);
    gens.push_back(Monomial::squarefree(n, vars));
  }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

SdefectReport sdefect_cycle(std::size_t n, unsigned m, ResourceCaps caps) {
  if (m < 1) throw PreconditionError("sdefect requires m >= 1");
  if (m > caps.max_m) throw ResourceLimit("power " + std::to_string(m) + " exceeds cap");
  const MonomialIdeal staircase = cycle_staircase_ideal(n);
  const Monomial f = Monomial::all_ones(n);
  SdefectReport report;
  report.graph_id = "C" + std::to_string(n);
  report.m = m;
  report.method = SdefectMethod::Cycle;
  std::uint64_t value = m % 2 == 0 ? 1 : 0;
  MonomialIdeal p = MonomialIdeal::unit(n);
  unsigned p_exp = 0;
  for (unsigned level = m % 2 == 0 ? 4 : 3; level <= m; level += 2) {
    while (p_exp < level - 2) {
      p = multiply(p, staircase, caps.max_gens);
      ++p_exp;
    }
    value += static_cast<std::uint64_t>(
        std::count_if(p.generators().begin(), p.generators().end(),
                      [&](const Monomial& g) { return !divides(f, g); }));
  }
  report.value = value;
  return report;
}

SdefectReport sdefect_complete_closed_form(std::size_t n, unsigned m) {
  if (m < 1) throw PreconditionError("sdefect requires m >= 1");
  SdefectReport report;
  report.graph_id = "K" + std::to_string(n);
  report.m = m;
  report.method = SdefectMethod::ClosedForm;
  const std::uint64_t k = (m - 1) / 2;
  report.value = m % 2 == 0 ? n * k + 1 : n * k;
  return report;
}

TriangleTailReport verify_triangle_tail(std::size_t n, ResourceCaps caps) {
  TriangleTailReport report;
  report.n = n;
  report.sdefect_n = sdefect_brute(CoverIdealCache(triangle_tail(n), caps), 2).value;
  report.applicable = n >= 5;
  if (!report.applicable) return report;
  report.sdefect_prev = sdefect_brute(CoverIdealCache(triangle_tail(n - 1), caps), 2).value;
  report.mu_path_vertices = mu(power(cover_ideal(path(n - 4)), 2, caps.max_gens));
  report.mu_path_edges = mu(power(cover_ideal(path(n - 3)), 2, caps.max_gens));
  report.holds_vertex_reading = report.sdefect_n == report.sdefect_prev + report.mu_path_vertices;
  report.holds_edge_reading = report.sdefect_n == report.sdefect_prev + report.mu_path_edges;
  return report;
}

TriangleTailSweep verify_triangle_tail_sweep(std::span<const std::size_t> ns, ResourceCaps caps) {
  TriangleTailSweep sweep;
  bool vertices = true;
  bool edges = true;
  for (auto n : ns) {
    auto report = verify_triangle_tail(n, caps);
    if (report.applicable) {
      vertices = vertices && report.holds_vertex_reading;
      edges = edges && report.holds_edge_reading;
    }
    sweep.reports.push_back(std::move(report));
  }
  sweep.convention = vertices ? "vertices" : edges ? "edges" : "none";
  return sweep;
}

}  // namespace symdef
