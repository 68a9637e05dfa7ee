#pragma once

#include <compare>
#include <string>
#include <vector>

namespace soscert {

// Exponent vector of a power product. The ambient variable count is the
// vector length; all monomials combined in one polynomial share it.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree() const;
  bool all_even() const;

  int operator[](int i) const { return exps[i]; }
  int& operator[](int i) { return exps[i]; }
  bool operator==(const Monomial& o) const = default;

  // Componentwise product/quotient of power products.
  Monomial operator*(const Monomial& o) const;
  // Returns false if any exponent would go negative.
  bool divides(const Monomial& o) const;
  Monomial divide_into(const Monomial& o) const;  // o / *this
};

// Canonical order: by total degree ascending, then lexicographically
// descending (variable 0 heaviest). Within one degree this lists
// x1-dominant monomials first, the convention the certificates use.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

// Print order for polynomial terms: leading (highest-degree) term first.
bool monomial_print_before(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const std::vector<std::string>& var_names);
std::vector<std::string> default_var_names(int nvars);

}  // namespace soscert
