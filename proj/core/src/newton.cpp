#include "soscert/newton.hpp"

#include <stdexcept>

#include "soscert/simplex.hpp"

namespace soscert {

namespace {
std::vector<std::vector<Rational>> exponent_points(const Polynomial& p) {
  std::vector<std::vector<Rational>> pts;
  pts.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Rational> v(m.nvars());
    for (int i = 0; i < m.nvars(); ++i) v[i] = m[i];
    pts.push_back(std::move(v));
  }
  return pts;
}
}  // namespace

bool in_newton_polytope(const Polynomial& target, const Monomial& point) {
  if (target.is_zero()) return false;
  if (point.nvars() != target.nvars()) throw std::invalid_argument("arity mismatch");
  std::vector<Rational> q(point.nvars());
  for (int i = 0; i < point.nvars(); ++i) q[i] = point[i];
  return in_convex_hull(exponent_points(target), q);
}

MonomialBasis newton_filter(const Polynomial& target, const MonomialBasis& basis) {
  if (target.is_zero()) return MonomialBasis(basis.nvars());
  auto pts = exponent_points(target);
  std::vector<Monomial> kept;
  for (const auto& m : basis.monomials()) {
    std::vector<Rational> doubled(m.nvars());
    for (int i = 0; i < m.nvars(); ++i) doubled[i] = 2 * m[i];
    if (in_convex_hull(pts, doubled)) kept.push_back(m);
  }
  return MonomialBasis(basis.nvars(), std::move(kept));
}

}  // namespace soscert
