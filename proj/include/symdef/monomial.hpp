#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace symdef {

/// A monomial x_1^{a_1} ... x_n^{a_n} over a fixed number of variables.
///
/// Values are immutable once built. Degree and a support bitmask are cached so
/// that divisibility tests can reject most candidates without touching the
/// exponent vector.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  /// The unit monomial 1 in n variables.
  explicit Monomial(std::size_t num_vars = 0);
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent e = 1);
  /// The product of all variables, x_1 x_2 ... x_n.
  static Monomial all_ones(std::size_t num_vars);
  /// Squarefree monomial with support given by 0-based variable indices.
  static Monomial squarefree(std::size_t num_vars, std::span<const std::size_t> vars);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  /// Bit i set iff x_{i+1} divides the monomial (only the first 64 variables are tracked).
  std::uint64_t support_mask() const { return support_; }
  Exponent max_exponent() const;

  bool is_unit() const { return degree_ == 0; }
  bool is_squarefree() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void refresh();

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
  std::uint64_t support_ = 0;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Product with checked exponent addition.
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::uint32_t k);

/// Canonical generator order: ascending degree, ties broken by the exponent
/// vector in descending lexicographic order (so x1^2 < x1 x2 < x2^2).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

/// Renders as x1^2*x3, or "1" for the unit monomial.
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace symdef
