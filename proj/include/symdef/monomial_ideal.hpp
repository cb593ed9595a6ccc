#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "symdef/monomial.hpp"

namespace symdef {

/// Generator cap used when a caller does not supply one.
inline constexpr std::size_t kUnlimitedGenerators = std::numeric_limits<std::size_t>::max();

/// A monomial ideal held by its unique minimal generating set.
///
/// Generators are always an antichain under divisibility and sorted by
/// grlex_less, so structural equality coincides with ideal equality. The zero
/// ideal has no generators; the unit ideal is generated by the monomial 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars); }
  static MonomialIdeal unit(std::size_t num_vars);
  static MonomialIdeal principal(const Monomial& m);
  /// Reduces an arbitrary generating set to its minimal antichain.
  static MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens);

  std::size_t num_vars() const { return num_vars_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// I ⊆ J.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b,
                       std::size_t max_gens = kUnlimitedGenerators);
/// I^k by repeated multiplication by I, minimalizing after every step.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned k,
                    std::size_t max_gens = kUnlimitedGenerators);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        std::size_t max_gens = kUnlimitedGenerators);
/// Left fold of pairwise intersections; an empty list yields the unit ideal.
MonomialIdeal intersect_all(std::size_t num_vars, std::span<const MonomialIdeal> ideals,
                            std::size_t max_gens = kUnlimitedGenerators);

/// Least degree of a nonzero element. Throws PreconditionError on the zero ideal.
std::uint64_t alpha(const MonomialIdeal& ideal);
/// Number of minimal generators.
inline std::size_t mu(const MonomialIdeal& ideal) { return ideal.size(); }

/// Drops every generator divisible by x_{var+1} and deletes that variable,
/// giving the image of the ideal in the quotient ring by x_{var+1}.
MonomialIdeal quotient_by_variable(const MonomialIdeal& ideal, std::size_t var);

std::string to_string(const MonomialIdeal& ideal);
std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

}  // namespace symdef
