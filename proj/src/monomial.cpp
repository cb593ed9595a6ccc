#include "symdef/monomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "symdef/errors.hpp"

namespace symdef {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionMismatch("monomials live in rings with " + std::to_string(a.num_vars()) +
                            " and " + std::to_string(b.num_vars()) + " variables");
  }
}

Monomial::Exponent checked_add(Monomial::Exponent x, Monomial::Exponent y) {
  if (x > std::numeric_limits<Monomial::Exponent>::max() - y) {
    throw ExponentOverflow("exponent overflow in monomial product");
  }
  return x + y;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { refresh(); }

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { refresh(); }

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent e) {
  if (index >= num_vars) throw DimensionMismatch("variable index out of range");
  std::vector<Exponent> exps(num_vars, 0);
  exps[index] = e;
  return Monomial(std::move(exps));
}

Monomial Monomial::all_ones(std::size_t num_vars) {
  return Monomial(std::vector<Exponent>(num_vars, 1));
}

Monomial Monomial::squarefree(std::size_t num_vars, std::span<const std::size_t> vars) {
  std::vector<Exponent> exps(num_vars, 0);
  for (auto v : vars) {
    if (v >= num_vars) throw DimensionMismatch("variable index out of range");
    exps[v] = 1;
  }
  return Monomial(std::move(exps));
}

void Monomial::refresh() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0 && i < 64) support_ |= std::uint64_t{1} << i;
  }
}

Monomial::Exponent Monomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  if ((a.support_mask() & ~b.support_mask()) != 0) return false;
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Monomial::Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Monomial::Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
  return Monomial(std::move(out));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Monomial::Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(out));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw PreconditionError("quotient: divisor does not divide dividend");
  std::vector<Monomial::Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Monomial(std::move(out));
}

Monomial pow(const Monomial& m, std::uint32_t k) {
  std::vector<Monomial::Exponent> out(m.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t e = std::uint64_t{m[i]} * k;
    if (e > std::numeric_limits<Monomial::Exponent>::max()) {
      throw ExponentOverflow("exponent overflow in monomial power");
    }
    out[i] = static_cast<Monomial::Exponent>(e);
  }
  return Monomial(std::move(out));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                      std::greater<>{});
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace symdef
