#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symdef {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);

/// Univariate polynomial in m with exact rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with the zero polynomial reported as degree 0.
  unsigned degree() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }
  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;  // trailing zeros stripped
};

/// Unique polynomial of degree < xs.size() through the points, by Newton
/// divided differences. xs must be distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Renders e.g. "3/2*m - 2".
std::string to_string(const Polynomial& p, const std::string& var = "m");

/// f(m) = pieces[m mod period](m) for m >= onset.
struct QuasiPolynomial {
  unsigned period = 1;
  std::vector<Polynomial> pieces;
  std::int64_t onset = 0;
  /// Per residue class: samples at or after the onset reproduced by the piece.
  std::vector<std::size_t> tail_samples;

  unsigned degree() const;
  Rational operator()(std::int64_t m) const;
};

struct NoFit {
  std::string reason;
  /// Sequence length that would make a fit attempt meaningful.
  std::size_t required_length = 0;
};

using FitResult = std::variant<QuasiPolynomial, NoFit>;

/// Fits seq[i] = f(start + i) by an eventually quasi-polynomial f of the given
/// period.
///
/// Each residue class is fitted independently: for every candidate degree k
/// the polynomial through the last k + 1 samples is extended backwards while
/// it keeps reproducing the data, and it is accepted only if at least one
/// sample beyond the k + 1 interpolation points confirms it. Among accepted
/// candidates the one reaching furthest back wins, ties going to the lower
/// degree. The onset is the earliest m from which every class is reproduced.
FitResult fit_quasipolynomial(std::span<const std::int64_t> seq, std::int64_t start,
                              unsigned period, std::optional<unsigned> max_degree = {});

}  // namespace symdef
