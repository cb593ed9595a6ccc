#include "symdef/quasi_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "symdef/errors.hpp"

namespace symdef {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw PreconditionError("interpolate: size mismatch");
  const std::size_t n = xs.size();
  // In-place divided-difference table; dd[i] ends as f[x_0..x_i].
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap == 0) throw PreconditionError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Horner-style expansion of the Newton form into the monomial basis.
  std::vector<Rational> coeffs;
  for (std::size_t i = n; i-- > 0;) {
    // coeffs <- coeffs * (x - xs[i]) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = c[i] < 0 ? Rational(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) os << '-';
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

unsigned QuasiPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& p : pieces) d = std::max(d, p.degree());
  return d;
}

Rational QuasiPolynomial::operator()(std::int64_t m) const {
  const auto r = static_cast<std::size_t>(((m % period) + period) % period);
  return pieces[r](Rational(m));
}

namespace {

struct ClassFit {
  Polynomial poly;
  std::size_t first_good = 0;  // index of the earliest reproduced sample
};

std::optional<ClassFit> fit_class(const std::vector<Rational>& ms, const std::vector<Rational>& ys,
                                  unsigned max_degree) {
  const std::size_t len = ms.size();
  std::optional<ClassFit> best;
  for (unsigned k = 0; k <= max_degree && k + 2 <= len; ++k) {
    const std::size_t from = len - (k + 1);
    Polynomial p = interpolate(std::span(ms).subspan(from), std::span(ys).subspan(from));
    std::size_t first = from;
    while (first > 0 && p(ms[first - 1]) == ys[first - 1]) --first;
    if (len - first < k + 2) continue;
    if (!best || first < best->first_good) best = ClassFit{std::move(p), first};
  }
  return best;
}

}  // namespace

FitResult fit_quasipolynomial(std::span<const std::int64_t> seq, std::int64_t start,
                              unsigned period, std::optional<unsigned> max_degree) {
  if (period == 0) throw PreconditionError("quasi-period must be positive");
  const std::size_t minimum = period * (max_degree.value_or(0) + 2);
  if (seq.size() < minimum) {
    return NoFit{"need at least " + std::to_string(minimum) + " samples, got " +
                     std::to_string(seq.size()),
                 minimum};
  }

  QuasiPolynomial out;
  out.period = period;
  out.pieces.resize(period);
  out.tail_samples.assign(period, 0);
  std::int64_t onset = start;
  std::vector<std::vector<std::int64_t>> class_ms(period);
  for (unsigned r = 0; r < period; ++r) {
    std::vector<Rational> ms, ys;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const std::int64_t m = start + static_cast<std::int64_t>(i);
      if (((m % period) + period) % period != r) continue;
      ms.emplace_back(m);
      ys.emplace_back(seq[i]);
      class_ms[r].push_back(m);
    }
    const unsigned cap = max_degree.value_or(static_cast<unsigned>(ms.size()));
    auto fit = fit_class(ms, ys, cap);
    if (!fit) {
      return NoFit{"residue class " + std::to_string(r) +
                       " never stabilizes within the data",
                   seq.size() + period};
    }
    if (fit->first_good > 0) onset = std::max(onset, class_ms[r][fit->first_good - 1] + 1);
    out.pieces[r] = std::move(fit->poly);
  }
  out.onset = onset;
  for (unsigned r = 0; r < period; ++r) {
    out.tail_samples[r] = static_cast<std::size_t>(
        std::count_if(class_ms[r].begin(), class_ms[r].end(),
                      [&](std::int64_t m) { return m >= onset; }));
  }
  return out;
}

}  // namespace symdef
