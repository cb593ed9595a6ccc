#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symdef/cover_ideal.hpp"

namespace symdef {

enum class SdefectMethod { Brute, Recursion, Cycle, ClosedForm };

std::string to_string(SdefectMethod method);

/// Value of sdefect(J(G), m) together with how it was obtained.
struct SdefectReport {
  std::string graph_id;
  unsigned m = 0;
  std::uint64_t value = 0;
  /// Minimal generators of J^(m) outside J^m; only filled by the brute method.
  std::vector<Monomial> witnesses;
  SdefectMethod method = SdefectMethod::Brute;
  /// False when a recursion was evaluated with its hypotheses deliberately skipped.
  bool hypotheses_verified = true;
  std::string note;
};

/// Counts minimal generators of J^(m) that do not lie in J^m.
///
/// Let M = (x_1, ..., x_n). A minimal generator u of J^(m) never lies in
/// M·J^(m), and monomial membership in J^m + M·J^(m) splits per summand, so
/// u survives in a minimal generating set of J^(m)/J^m iff u is not in J^m.
SdefectReport sdefect_brute(const CoverIdealCache& cache, unsigned m);

/// Number of minimal generators of I^m not divisible by f (f = product of all
/// variables in the intended use). nu(I, 0) = 1 since I^0 is generated by 1.
std::uint64_t nu(const MonomialIdeal& ideal, unsigned m, const Monomial& f,
                 std::size_t max_gens = kUnlimitedGenerators);

/// Which sufficient condition for the Indecomposability Property fired.
struct IndecomposabilityCertificate {
  enum class Condition { None, EquigeneratedLowF, SeparatingVariable, SeparatingBlock };

  Condition condition = Condition::None;
  /// Variables witnessing the separating conditions.
  VertexSet witness_vars;
  std::vector<std::uint64_t> generator_degrees;
  std::uint64_t f_degree = 0;

  bool holds() const { return condition != Condition::None; }
};

std::string to_string(IndecomposabilityCertificate::Condition c);

/// Checks the three degree-based sufficient conditions on J(G):
///  1. J equigenerated in degree alpha with deg F < 2 alpha;
///  2. two degrees a1 < a2, deg F < a1 + a2, and a variable dividing every
///     degree-a1 generator and no degree-a2 generator;
///  3. two degrees a1 < a2, deg F < a1 + a2, and c variables dividing every
///     degree-a2 generator and no degree-a1 generator with a2 - a1 <= c.
IndecomposabilityCertificate check_indecomposability_conditions(const MonomialIdeal& cover);

struct ExhaustiveBounds {
  unsigned k_max = 2;
  unsigned s_max = 3;
  /// Skip products whose target power 2k + s exceeds this.
  unsigned max_power = UINT_MAX;
  /// Only use generators of minimal degree as factors.
  bool min_degree_only = false;
};

/// A product F^k g_1 ... g_s found inside J^(2k+s).
struct DecompositionCounterexample {
  unsigned k = 0;
  std::vector<Monomial> factors;
  Monomial product;
  /// 2k + s generators of J whose product divides `product`.
  std::vector<Monomial> decomposition;
};

struct ExhaustiveResult {
  bool holds = true;
  std::optional<DecompositionCounterexample> counterexample;
  std::uint64_t products_checked = 0;
};

/// Searches F^k times every multiset of s minimal generators, for
/// 1 <= k <= k_max and 0 <= s <= s_max, for membership in the ordinary power
/// J^(2k+s). A negative answer is only a certificate up to the bounds.
ExhaustiveResult check_indecomposability_exhaustive(const CoverIdealCache& cache,
                                                    const ExhaustiveBounds& bounds);

/// r minimal generators of `ideal` whose product divides q, if they exist.
std::optional<std::vector<Monomial>> factor_in_power(const MonomialIdeal& ideal,
                                                     const Monomial& q, unsigned r);

struct RecursionOptions {
  /// When false the recursion value is returned even if a hypothesis fails;
  /// the report is then flagged and explains which hypothesis failed.
  bool enforce_hypotheses = true;
};

/// sdefect(J, m) = sdefect(J, m-2) + nu(J, m-2), seeded with sdefect(J,1) = 0
/// and sdefect(J,2) = 1. Requires sdefect(J,2) = 1 and the Indecomposability
/// Property, established by the sufficient conditions or an exhaustive search
/// over all products with 2k + s <= m. Throws PreconditionError naming the
/// failed hypothesis.
SdefectReport sdefect_recursive(const CoverIdealCache& cache, unsigned m,
                                RecursionOptions options = {});

/// x_i x_{i+2} ... x_{i+n-1} (indices mod n) for i = 0..n-1, odd n >= 3.
MonomialIdeal cycle_staircase_ideal(std::size_t n);

/// Odd-cycle recursion sdefect(m) = sdefect(m-2) + nu(I*, m-2), where I* is
/// generated by the staircase covers.
SdefectReport sdefect_cycle(std::size_t n, unsigned m, ResourceCaps caps = {});

/// nk + 1 for m = 2k + 2 and nk for m = 2k + 1.
SdefectReport sdefect_complete_closed_form(std::size_t n, unsigned m);

/// Both sides of the triangle-with-tail recursion at m = 2.
struct TriangleTailReport {
  std::size_t n = 0;
  bool applicable = false;  // n >= 5
  std::uint64_t sdefect_n = 0;
  std::uint64_t sdefect_prev = 0;
  /// mu(J(P)^2) for P with n-4 vertices and with n-4 edges.
  std::uint64_t mu_path_vertices = 0;
  std::uint64_t mu_path_edges = 0;
  bool holds_vertex_reading = false;
  bool holds_edge_reading = false;

  bool holds() const { return holds_vertex_reading || holds_edge_reading; }
};

/// For n < 5 only sdefect_n is filled and `applicable` is false.
TriangleTailReport verify_triangle_tail(std::size_t n, ResourceCaps caps = {});

/// Sweep over several n with a single path-size reading: the vertex-count
/// reading is used if it holds for every applicable n, otherwise the
/// edge-count reading, otherwise "none".
struct TriangleTailSweep {
  std::vector<TriangleTailReport> reports;
  std::string convention;

  bool holds() const { return convention != "none"; }
};

TriangleTailSweep verify_triangle_tail_sweep(std::span<const std::size_t> ns,
                                             ResourceCaps caps = {});

}  // namespace symdef
