#include "soscert/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace soscert {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::all_even() const {
  for (int e : exps)
    if (e % 2 != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps.size() != o.exps.size()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r(*this);
  for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (exps.size() != o.exps.size()) return false;
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  if (!divides(o)) throw std::invalid_argument("monomial does not divide");
  Monomial r(o);
  for (size_t i = 0; i < exps.size(); ++i) r.exps[i] -= exps[i];
  return r;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;  // lexicographically descending within a degree
}

bool monomial_print_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& var_names) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_names.at(i);
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  if (out.empty()) out = "1";
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace soscert
