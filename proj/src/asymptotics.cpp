#include "symdef/asymptotics.hpp"

#include <random>

#include "symdef/errors.hpp"
#include "symdef/sdefect.hpp"

namespace symdef {

std::pair<Rational, unsigned> waldschmidt_general_with_index(
    std::span<const MonomialIdeal> powers) {
  if (powers.empty()) throw PreconditionError("need at least the first symbolic power");
  Rational best;
  unsigned index = 0;
  for (unsigned m = 1; m <= powers.size(); ++m) {
    Rational ratio(alpha(powers[m - 1]), m);
    if (index == 0 || ratio < best) {
      best = ratio;
      index = m;
    }
  }
  return {best, index};
}

Rational waldschmidt_general(std::span<const MonomialIdeal> powers) {
  return waldschmidt_general_with_index(powers).first;
}

namespace {

void require_edge(const CoverIdealCache& cache) {
  if (cache.graph().num_edges() == 0) throw PreconditionError("graph has no edges");
}

Rational resurgence_bound_unchecked(const CoverIdealCache& cache) {
  const std::uint64_t a = alpha(cache.cover());
  const std::uint64_t n = cache.graph().num_vertices();
  // n/2 < alpha  <=>  n < 2 alpha
  if (n < 2 * a) return Rational(2 * a, n);
  return Rational(1);
}

}  // namespace

WaldschmidtReport waldschmidt(const CoverIdealCache& cache) {
  require_edge(cache);
  const std::vector<MonomialIdeal> powers{cache.symbolic(1), cache.symbolic(2)};
  WaldschmidtReport report;
  for (const auto& p : powers) report.alphas.push_back(alpha(p));
  std::tie(report.value, report.minimizing_index) = waldschmidt_general_with_index(powers);
  if (sdefect_brute(cache, 2).value == 1) {
    report.resurgence_lower_bound = resurgence_bound_unchecked(cache);
  }
  return report;
}

Rational resurgence_lower_bound(const CoverIdealCache& cache) {
  require_edge(cache);
  const auto second = sdefect_brute(cache, 2).value;
  if (second != 1) {
    throw PreconditionError("resurgence bound needs sdefect(J,2) = 1, got " +
                            std::to_string(second));
  }
  return resurgence_bound_unchecked(cache);
}

GrowthDegree mu_growth_degree(const MonomialIdeal& ideal, unsigned m_max, std::size_t max_gens) {
  GrowthDegree out;
  MonomialIdeal p = MonomialIdeal::unit(ideal.num_vars());
  for (unsigned m = 1; m <= m_max; ++m) {
    p = multiply(p, ideal, max_gens);
    out.counts.push_back(static_cast<std::int64_t>(mu(p)));
  }
  auto fit = fit_quasipolynomial(out.counts, 1, 1);
  if (const auto* none = std::get_if<NoFit>(&fit)) {
    throw PreconditionError("mu(I^m) does not settle for m <= " + std::to_string(m_max) + ": " +
                            none->reason);
  }
  const auto& q = std::get<QuasiPolynomial>(fit);
  out.degree = q.degree();
  out.onset = q.onset;
  out.confirming_samples = q.tail_samples[0] - (out.degree + 1);
  return out;
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    // Bareiss step: every division below is exact.
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[r][j] = (rows[rank][c] * rows[r][j] - rows[r][c] * rows[rank][j]) / prev_pivot;
      }
      rows[r][c] = 0;
    }
    prev_pivot = rows[rank][c];
    ++rank;
  }
  return rank;
}

bool jacobian_rank_full(std::span<const Monomial> gens, std::uint64_t seed, unsigned retries) {
  if (gens.empty()) return true;
  const std::size_t n = gens.front().num_vars();
  for (const auto& g : gens) {
    if (g.num_vars() != n) throw DimensionMismatch("generators live in different rings");
    if (!g.is_squarefree()) throw PreconditionError("jacobian criterion needs squarefree input");
  }
  if (gens.size() > n) return false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(2, 1'000'000);
  for (unsigned attempt = 0; attempt <= retries; ++attempt) {
    std::vector<BigInt> point(n);
    for (auto& v : point) v = draw(rng);
    std::vector<std::vector<BigInt>> rows;
    for (const auto& g : gens) {
      std::vector<BigInt> row(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (g[j] == 0) continue;
        BigInt entry = 1;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != j && g[i] != 0) entry *= point[i];
        }
        row[j] = entry;
      }
      rows.push_back(std::move(row));
    }
    if (exact_rank(std::move(rows)) == gens.size()) return true;
  }
  return false;
}

SdefectDegreeReport sdefect_degree(const CoverIdealCache& cache, unsigned m_max) {
  require_edge(cache);
  if (sdefect_brute(cache, 2).value != 1) {
    throw PreconditionError("degree formula needs sdefect(J,2) = 1");
  }
  if (!check_indecomposability_conditions(cache.cover()).holds()) {
    ExhaustiveBounds bounds;
    bounds.k_max = m_max / 2;
    bounds.s_max = m_max >= 2 ? m_max - 2 : 0;
    bounds.max_power = m_max;
    const auto search = check_indecomposability_exhaustive(cache, bounds);
    if (!search.holds) {
      throw PreconditionError("degree formula needs the Indecomposability Property, which fails");
    }
  }

  SdefectDegreeReport report;
  const MonomialIdeal& cover = cache.cover();
  const std::size_t n = cover.num_vars();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t q = mu(quotient_by_variable(cover, i));
    if (i == 0 || q > report.quotient_mu) {
      report.quotient_mu = q;
      report.maximizing_var = i;
    }
  }
  const MonomialIdeal quotient = quotient_by_variable(cover, report.maximizing_var);
  report.quotient_degree =
      mu_growth_degree(quotient, std::max(m_max, 8U), cache.caps().max_gens).degree;
  report.predicted_degree = report.quotient_degree + 1;

  for (unsigned m = 1; m <= m_max; ++m) {
    report.sdefect_sequence.push_back(static_cast<std::int64_t>(sdefect_brute(cache, m).value));
  }
  auto fit = fit_quasipolynomial(report.sdefect_sequence, 1, 2);
  if (const auto* q = std::get_if<QuasiPolynomial>(&fit)) report.fitted_degree = q->degree();
  report.agrees = report.fitted_degree == report.predicted_degree;
  return report;
}

}  // namespace symdef
