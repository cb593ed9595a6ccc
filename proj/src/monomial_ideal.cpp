#include "symdef/monomial_ideal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "symdef/errors.hpp"

namespace symdef {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionMismatch("ideals live in rings with " + std::to_string(a.num_vars()) + " and " +
                            std::to_string(b.num_vars()) + " variables");
  }
}

// Candidate lists are bounded by this multiple of the generator cap before
// minimalization, so a runaway product fails fast instead of exhausting memory.
constexpr std::size_t kCandidateSlack = 64;

void check_candidates(std::size_t lhs, std::size_t rhs, std::size_t max_gens) {
  if (max_gens == kUnlimitedGenerators) return;
  const std::size_t bound = max_gens > kUnlimitedGenerators / kCandidateSlack
                                ? kUnlimitedGenerators
                                : max_gens * kCandidateSlack;
  if (lhs != 0 && rhs > bound / lhs) {
    throw ResourceLimit("intermediate generator count " + std::to_string(lhs) + "x" +
                        std::to_string(rhs) + " exceeds cap " + std::to_string(max_gens));
  }
}

MonomialIdeal capped(MonomialIdeal ideal, std::size_t max_gens) {
  if (ideal.size() > max_gens) {
    throw ResourceLimit("ideal has " + std::to_string(ideal.size()) +
                        " minimal generators, cap is " + std::to_string(max_gens));
  }
  return ideal;
}

}  // namespace

MonomialIdeal MonomialIdeal::unit(std::size_t num_vars) {
  return principal(Monomial(num_vars));
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  MonomialIdeal out(m.num_vars());
  out.gens_.push_back(m);
  return out;
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t num_vars, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) throw DimensionMismatch("generator has wrong variable count");
  }
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(num_vars);
  auto& kept = out.gens_;
  kept.reserve(gens.size());
  // Generators of equal degree never divide one another once deduplicated,
  // so each candidate is only compared against strictly lower-degree survivors.
  std::size_t lower_end = 0;
  std::uint64_t current_degree = 0;
  for (auto& g : gens) {
    if (kept.empty() || g.degree() != current_degree) {
      lower_end = kept.size();
      current_degree = g.degree();
    }
    bool redundant = false;
    for (std::size_t i = 0; i < lower_end; ++i) {
      if (divides(kept[i], g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return out;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (ideal.num_vars() != m.num_vars()) throw DimensionMismatch("monomial and ideal rings differ");
  for (const auto& g : ideal.generators()) {
    if (g.degree() > m.degree()) return false;
    if (divides(g, m)) return true;
  }
  return false;
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_same_ring(inner, outer);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Monomial& g) { return contains(outer, g); });
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t max_gens) {
  require_same_ring(a, b);
  check_candidates(a.size(), b.size(), max_gens);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return capped(MonomialIdeal::minimalize(a.num_vars(), std::move(gens)), max_gens);
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned k, std::size_t max_gens) {
  MonomialIdeal acc = MonomialIdeal::unit(ideal.num_vars());
  for (unsigned i = 0; i < k; ++i) acc = multiply(acc, ideal, max_gens);
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t max_gens) {
  require_same_ring(a, b);
  check_candidates(a.size(), b.size(), max_gens);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return capped(MonomialIdeal::minimalize(a.num_vars(), std::move(gens)), max_gens);
}

MonomialIdeal intersect_all(std::size_t num_vars, std::span<const MonomialIdeal> ideals,
                            std::size_t max_gens) {
  MonomialIdeal acc = MonomialIdeal::unit(num_vars);
  for (const auto& ideal : ideals) acc = intersect(acc, ideal, max_gens);
  return acc;
}

std::uint64_t alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("alpha undefined for the zero ideal");
  return ideal.generators().front().degree();
}

MonomialIdeal quotient_by_variable(const MonomialIdeal& ideal, std::size_t var) {
  const std::size_t n = ideal.num_vars();
  if (var >= n) throw DimensionMismatch("variable index out of range");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g[var] != 0) continue;
    std::vector<Monomial::Exponent> exps;
    exps.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != var) exps.push_back(g[i]);
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::minimalize(n - 1, std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ", ";
    first = false;
    os << g;
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  return os << to_string(ideal);
}

}  // namespace symdef
