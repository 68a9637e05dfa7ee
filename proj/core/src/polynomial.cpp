#include "soscert/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace soscert {

namespace {
void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(a.nvars()) +
                                " vs " + std::to_string(b.nvars()));
}

Rational pow_rational(const Rational& base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}
}  // namespace

Polynomial::Polynomial(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial::unit(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m = Monomial::unit(nvars);
  m[index] = power;
  Polynomial p(nvars);
  p.add_term(m, Rational(1));
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_arity(*this, o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_arity(*this, o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_arity(*this, o);
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::differentiate(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("differentiation index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d(m);
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Polynomial Polynomial::substitute_and_drop(int var, const Rational& value) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("substitution index out of range");
  Polynomial r(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    Monomial d = Monomial::unit(nvars_ - 1);
    for (int i = 0, j = 0; i < nvars_; ++i) {
      if (i == var) continue;
      d[j++] = m[i];
    }
    r.add_term(d, c * pow_rational(value, m[var]));
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) v *= pow_rational(point[i], m[i]);
    total += v;
  }
  return total;
}

std::string Polynomial::to_text(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return monomial_print_before(a->first, b->first);
  });
  std::string out;
  for (const auto* t : ordered) {
    const auto& [m, c] = *t;
    Rational a = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    bool unit_coeff = (a == 1);
    bool constant = (m.degree() == 0);
    if (!unit_coeff || constant) out += to_string(a);
    if (!constant) {
      if (!unit_coeff) out += "*";
      out += to_string(m, var_names);
    }
  }
  return out;
}

std::string Polynomial::to_text() const { return to_text(default_var_names(nvars_)); }

Polynomial homogenize(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  int d = *p.degree();
  Polynomial r(p.nvars() + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial h = Monomial::unit(p.nvars() + 1);
    for (int i = 0; i < p.nvars(); ++i) h[i] = m[i];
    h[p.nvars()] = d - m.degree();
    r.add_term(h, c);
  }
  return r;
}

Polynomial dehomogenize(const Polynomial& p, int var, const Rational& value) {
  return p.substitute_and_drop(var, value);
}

Polynomial sum_of_squares_multiplier(int nvars, int r) {
  if (r < 0) throw std::invalid_argument("multiplier exponent must be >= 0");
  Polynomial sum(nvars);
  for (int i = 0; i < nvars; ++i) {
    Monomial m = Monomial::unit(nvars);
    m[i] = 2;
    sum.add_term(m, Rational(1));
  }
  Polynomial out = Polynomial::constant(nvars, Rational(1));
  for (int i = 0; i < r; ++i) out = out * sum;
  return out;
}

Polynomial embed(const Polynomial& p, int new_nvars, const std::vector<int>& var_map) {
  if (static_cast<int>(var_map.size()) != p.nvars())
    throw std::invalid_argument("variable map has wrong length");
  Polynomial r(new_nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial e = Monomial::unit(new_nvars);
    for (int i = 0; i < p.nvars(); ++i) {
      if (var_map[i] < 0 || var_map[i] >= new_nvars)
        throw std::out_of_range("variable map entry out of range");
      e[var_map[i]] += m[i];
    }
    r.add_term(e, c);
  }
  return r;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (num.nvars() != den.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial rem = num;
  Polynomial quot(num.nvars());
  const auto& dlead = *den.terms().rbegin();  // leading term in canonical order
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    if (!dlead.first.divides(rlead.first)) return std::nullopt;
    Monomial q = dlead.first.divide_into(rlead.first);
    Rational c = rlead.second / dlead.second;
    Polynomial step(num.nvars());
    step.add_term(q, c);
    quot = quot + step;
    rem = rem - step * den;
  }
  return quot;
}

}  // namespace soscert
