#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soscert/monomial.hpp"
#include "soscert/rational.hpp"

namespace soscert {

// Sparse multivariate polynomial over exact rationals. Canonical form:
// no zero coefficients are stored, and every monomial has the ambient
// arity. Values are immutable in spirit: operations return new objects.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, TermMap terms);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  // Degree of the zero polynomial is undefined by convention.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);  // merges, drops zeros

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& o) const = default;

  Polynomial differentiate(int var) const;
  // Substitutes `value` for variable `var` and removes it from the
  // ambient space (arity drops by one).
  Polynomial substitute_and_drop(int var, const Rational& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Largest power of (x_1^2+...+x_n^2)-style helpers live in free functions.

  std::string to_text(const std::vector<std::string>& var_names) const;
  std::string to_text() const;  // default variable names x1..xn

 private:
  int nvars_;
  TermMap terms_;
};

// y^d * p(x/y) with denominators cleared: a form of degree deg(p) in
// nvars+1 variables, the new variable appended last.
Polynomial homogenize(const Polynomial& p);

// Inverse direction; also usable for generic partial evaluation.
Polynomial dehomogenize(const Polynomial& p, int var, const Rational& value = Rational(1));

// (x_1^2 + ... + x_n^2)^r
Polynomial sum_of_squares_multiplier(int nvars, int r);

// Extends p to a larger ambient space, mapping old variable i to var_map[i].
Polynomial embed(const Polynomial& p, int new_nvars, const std::vector<int>& var_map);

// Exact polynomial quotient; returns nullopt when the division leaves a
// remainder. Used by the fraction-free determinant elimination.
std::optional<Polynomial> try_exact_divide(const Polynomial& num, const Polynomial& den);

}  // namespace soscert
