#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symdef/asymptotics.hpp"
#include "symdef/errors.hpp"
#include "symdef/sdefect.hpp"

using namespace symdef;

namespace {

QuasiPolynomial require_fit(const FitResult& r) {
  REQUIRE(std::holds_alternative<QuasiPolynomial>(r));
  return std::get<QuasiPolynomial>(r);
}

std::vector<std::int64_t> sdefect_sequence(const Graph& g, unsigned m_max) {
  const CoverIdealCache cache(g);
  std::vector<std::int64_t> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    out.push_back(static_cast<std::int64_t>(sdefect_brute(cache, m).value));
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial interpolation and rendering") {
  const std::vector<Rational> xs{1, 2, 3};
  const std::vector<Rational> ys{2, 5, 10};  // m^2 + 1
  const Polynomial p = interpolate(xs, ys);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(4)) == 17);
  CHECK(to_string(p) == "m^2 + 1");
  CHECK(to_string(Polynomial({Rational(-2), Rational(3, 2)})) == "3/2*m - 2");
  CHECK(to_string(Polynomial()) == "0");
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("interpolation matches the Lagrange form") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 6;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < k; ++i) {
      xs.emplace_back(static_cast<int>(3 * i) - 4);
      ys.emplace_back(coeff(rng), 1 + trial % 3);
    }
    const Polynomial p = interpolate(xs, ys);
    for (int x = -6; x <= 12; ++x) CHECK(p(Rational(x)) == oracle::lagrange(xs, ys, Rational(x)));
  }
}

TEST_CASE("fitting the triangle sequence") {
  const std::vector<std::int64_t> seq{0, 1, 3, 4, 6, 7, 9, 10};
  const auto q = require_fit(fit_quasipolynomial(seq, 1, 2));
  CHECK(q.period == 2);
  CHECK(q.degree() == 1);
  CHECK(q.pieces[0] == Polynomial({Rational(-2), Rational(3, 2)}));
  CHECK(q.pieces[1] == Polynomial({Rational(-3, 2), Rational(3, 2)}));
  for (std::int64_t m = 1; m <= 8; ++m) CHECK(q(m) == seq[m - 1]);
  CHECK(seq == sdefect_sequence(complete(3), 8));
}

TEST_CASE("fitting constant and short sequences") {
  const std::vector<std::int64_t> zeros(8, 0);
  const auto q = require_fit(fit_quasipolynomial(zeros, 1, 2));
  CHECK(q.degree() == 0);
  CHECK(q.pieces[0].is_zero());
  CHECK(q.onset == 1);

  const std::vector<std::int64_t> tiny{1, 2, 3};
  const auto r = fit_quasipolynomial(tiny, 1, 2, 2);
  REQUIRE(std::holds_alternative<NoFit>(r));
  CHECK(std::get<NoFit>(r).required_length == 8);
}

TEST_CASE("fitting detects a late onset") {
  // Linear from m = 4 on, junk before.
  std::vector<std::int64_t> seq{9, -3, 8};
  for (std::int64_t m = 4; m <= 12; ++m) seq.push_back(2 * m + 1);
  const auto q = require_fit(fit_quasipolynomial(seq, 1, 1));
  CHECK(q.onset == 4);
  CHECK(q.degree() == 1);
  CHECK(q.tail_samples[0] == 9);
}

TEST_CASE("period 1 fit on a polynomial sequence equals the interpolant") {
  std::vector<std::int64_t> seq;
  for (std::int64_t m = 0; m < 10; ++m) seq.push_back(m * m * m - 4 * m + 7);
  const auto q = require_fit(fit_quasipolynomial(seq, 0, 1));
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::int64_t m = 6; m < 10; ++m) {
    xs.emplace_back(m);
    ys.emplace_back(seq[m]);
  }
  for (int x = -3; x < 15; ++x) CHECK(q.pieces[0](Rational(x)) == oracle::lagrange(xs, ys, Rational(x)));
}

TEST_CASE("odd cycle of length five grows quadratically") {
  const auto seq = sdefect_sequence(cycle(5), 12);
  const auto q = require_fit(fit_quasipolynomial(seq, 1, 2));
  CHECK(q.degree() == 2);
  CHECK(q.period <= 2);
  CHECK(q.pieces[0] == Polynomial({Rational(1), Rational(-5, 2), Rational(5, 4)}));
  CHECK(q.pieces[1] == Polynomial({Rational(5, 4), Rational(-5, 2), Rational(5, 4)}));
}

TEST_CASE("Waldschmidt constants") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const CoverIdealCache cache(complete(n));
    const auto w = waldschmidt(cache);
    CHECK(w.value == Rational(n, 2));
    CHECK(w.alphas[1] == alpha(symbolic_power(complete(n), 2)));
    CHECK(w.value <= Rational(w.alphas[0]));
  }
  const CoverIdealCache c5(cycle(5));
  const auto w = waldschmidt(c5);
  CHECK(w.value == Rational(5, 2));
  CHECK(w.minimizing_index == 2);
  REQUIRE(w.resurgence_lower_bound.has_value());
  CHECK(*w.resurgence_lower_bound == Rational(6, 5));

  const CoverIdealCache c6(cycle(6));
  CHECK(waldschmidt(c6).value == Rational(alpha(c6.cover())));
  CHECK_FALSE(waldschmidt(c6).resurgence_lower_bound.has_value());
  CHECK_THROWS_AS(waldschmidt(CoverIdealCache(Graph(3))), PreconditionError);
}

TEST_CASE("general Waldschmidt formula") {
  const auto j = cover_ideal(cycle(5));
  const std::vector<MonomialIdeal> one{j};
  CHECK(waldschmidt_general(one) == Rational(alpha(j)));
  // alpha_2 / 2 > alpha_1: the minimum stays at m = 1.
  const auto x = MonomialIdeal::principal(Monomial{1, 0});
  const std::vector<MonomialIdeal> artificial{x, MonomialIdeal::principal(Monomial{2, 1})};
  const auto [value, index] = waldschmidt_general_with_index(artificial);
  CHECK(value == 1);
  CHECK(index == 1);
}

TEST_CASE("Waldschmidt formula agrees with the general one on small graphs") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : graphs_up_to_isomorphism(n, true)) {
      const CoverIdealCache cache(g);
      const std::vector<MonomialIdeal> powers{cache.symbolic(1), cache.symbolic(2)};
      const Rational w = waldschmidt(cache).value;
      CHECK(w == waldschmidt_general(powers));
      for (unsigned m = 1; m <= 5; ++m) CHECK(Rational(alpha(cache.symbolic(m)), m) >= w);
    }
  }
}

TEST_CASE("resurgence lower bounds") {
  CHECK(resurgence_lower_bound(CoverIdealCache(complete(3))) == Rational(4, 3));
  CHECK(resurgence_lower_bound(CoverIdealCache(cycle(5))) == Rational(6, 5));
  CHECK(resurgence_lower_bound(CoverIdealCache(complete(4))) == Rational(3, 2));
  CHECK_THROWS_AS(resurgence_lower_bound(CoverIdealCache(path(4))), PreconditionError);
}

TEST_CASE("fraction-free rank matches rational elimination") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 5;
    const std::size_t cols = 1 + (trial / 5) % 5;
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    std::vector<std::vector<Rational>> b(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        // Sparse entries make rank deficiency common.
        const int v = trial % 2 == 0 && entry(rng) > 0 ? 0 : entry(rng);
        a[i][j] = v;
        b[i][j] = v;
      }
    }
    CHECK(exact_rank(a) == oracle::rank(b));
  }
}

TEST_CASE("Jacobian criterion") {
  for (std::size_t n = 5; n <= 11; n += 2) {
    const auto q = quotient_by_variable(cycle_staircase_ideal(n), 0);
    CHECK(q.size() == (n - 1) / 2);
    CHECK(jacobian_rank_full(q.generators()));
  }
  const std::vector<Monomial> dup{Monomial{1, 1, 0}, Monomial{1, 1, 0}};
  CHECK_FALSE(jacobian_rank_full(dup));
  const std::vector<Monomial> single{Monomial{1, 1}};
  CHECK(jacobian_rank_full(single));
  // x1x2 * x3x4 = x1x3 * x2x4: dependent.
  const std::vector<Monomial> dependent{Monomial{1, 1, 0, 0}, Monomial{0, 0, 1, 1},
                                        Monomial{1, 0, 1, 0}, Monomial{0, 1, 0, 1}};
  CHECK_FALSE(jacobian_rank_full(dependent));
  const std::vector<Monomial> squared{Monomial{2, 0}};
  CHECK_THROWS_AS(jacobian_rank_full(squared), PreconditionError);
}

TEST_CASE("independent generators have binomial growth") {
  const auto staircase = quotient_by_variable(cycle_staircase_ideal(9), 0);
  const std::vector<std::vector<Monomial>> sets{
      {Monomial{1, 1, 0, 0}, Monomial{0, 1, 1, 0}, Monomial{0, 0, 1, 1}},
      {Monomial{1, 0, 1, 0, 1}, Monomial{0, 1, 0, 1, 1}},
      {staircase.generators().begin(), staircase.generators().end()},
  };
  for (const auto& gens : sets) {
    REQUIRE(jacobian_rank_full(gens));
    const std::size_t s = gens.size();
    const auto ideal = MonomialIdeal::minimalize(gens.front().num_vars(), gens);
    for (unsigned m = 1; m <= 8; ++m) CHECK(mu(power(ideal, m)) == oracle::binomial(m + s - 1, s - 1));
  }
}

TEST_CASE("growth degree of mu") {
  CHECK(mu_growth_degree(MonomialIdeal::principal(Monomial{1, 2}), 6).degree == 0);
  const auto x = MonomialIdeal::minimalize(2, {Monomial{1, 0}, Monomial{0, 1}});
  const auto g = mu_growth_degree(x, 6);
  CHECK(g.degree == 1);
  CHECK(g.counts == std::vector<std::int64_t>{2, 3, 4, 5, 6, 7});
  const auto three = MonomialIdeal::minimalize(
      4, {Monomial{1, 1, 0, 0}, Monomial{0, 1, 1, 0}, Monomial{0, 0, 1, 1}});
  CHECK(mu_growth_degree(three, 8).degree == 2);
}

TEST_CASE("degree of the symbolic defect") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = sdefect_degree(CoverIdealCache(complete(n)), 10);
    CHECK(r.predicted_degree == 1);
    CHECK(r.agrees);
  }
  const auto c5 = sdefect_degree(CoverIdealCache(cycle(5)), 10);
  CHECK(c5.predicted_degree == 2);
  CHECK(c5.fitted_degree == 2u);
  const auto bf = sdefect_degree(CoverIdealCache(butterfly()), 10);
  CHECK(bf.predicted_degree == 2);
  CHECK(bf.agrees);
  CHECK_THROWS_AS(sdefect_degree(CoverIdealCache(net()), 6), PreconditionError);
}
