#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symdef/cover_ideal.hpp"
#include "symdef/quasi_polynomial.hpp"

namespace symdef {

struct WaldschmidtReport {
  /// alpha(J^(m)) for m = 1, 2.
  std::vector<std::uint64_t> alphas;
  /// The m attaining min alpha(J^(m)) / m (smallest such m).
  unsigned minimizing_index = 1;
  Rational value;
  /// Present only when sdefect(J,2) = 1; this is a lower bound, not the resurgence.
  std::optional<Rational> resurgence_lower_bound;
};

/// min over m <= powers.size() of alpha(powers[m-1]) / m, with the index attaining it.
std::pair<Rational, unsigned> waldschmidt_general_with_index(std::span<const MonomialIdeal> powers);
Rational waldschmidt_general(std::span<const MonomialIdeal> powers);

/// Waldschmidt constant of J(G) from its first two symbolic powers, which
/// suffice because the symbolic Rees algebra of a cover ideal is generated in
/// degree at most 2.
WaldschmidtReport waldschmidt(const CoverIdealCache& cache);

/// 2 alpha / n if n/2 < alpha, else 1. Requires sdefect(J(G),2) = 1.
Rational resurgence_lower_bound(const CoverIdealCache& cache);

struct GrowthDegree {
  unsigned degree = 0;
  std::int64_t onset = 0;
  /// Samples beyond the degree + 1 needed to pin the polynomial.
  std::size_t confirming_samples = 0;
  std::vector<std::int64_t> counts;  // mu(I^m) for m = 1..m_max
};

/// Degree of the polynomial eventually equal to mu(I^m), read off m <= m_max.
/// Throws PreconditionError if the counts do not settle within the window.
GrowthDegree mu_growth_degree(const MonomialIdeal& ideal, unsigned m_max,
                              std::size_t max_gens = kUnlimitedGenerators);

/// Jacobian criterion for algebraic independence of squarefree monomials.
///
/// The partial-derivative matrix is evaluated at a random integer point drawn
/// from [2, 10^6] and its rank computed exactly. Full rank at any point
/// certifies full generic rank; a deficient draw is retried up to `retries`
/// times before answering false. Throws PreconditionError on non-squarefree input.
bool jacobian_rank_full(std::span<const Monomial> gens, std::uint64_t seed = 0x5eed,
                        unsigned retries = 3);

/// Exact rank of an integer matrix by fraction-free elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

struct SdefectDegreeReport {
  std::size_t maximizing_var = 0;
  std::size_t quotient_mu = 0;
  unsigned quotient_degree = 0;
  unsigned predicted_degree = 0;
  std::vector<std::int64_t> sdefect_sequence;  // m = 1..m_max
  std::optional<unsigned> fitted_degree;
  bool agrees = false;
};

/// Degree of sdefect(J(G), m) as a quasi-polynomial: one more than the
/// growth degree of mu of the powers of J modulo the variable whose quotient
/// keeps the most generators. Cross-checked against a period-2 fit of the
/// brute-force sequence up to m_max. Requires sdefect(J,2) = 1 and evidence
/// for the Indecomposability Property.
SdefectDegreeReport sdefect_degree(const CoverIdealCache& cache, unsigned m_max);

}  // namespace symdef
