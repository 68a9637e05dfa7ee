#include "soscert/simplex.hpp"

#include <stdexcept>

namespace soscert {

bool in_convex_hull(const std::vector<std::vector<Rational>>& points,
                    const std::vector<Rational>& q) {
  if (points.empty()) return false;
  const size_t dim = q.size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("hull point dimension mismatch");

  // Quick reject: q must lie inside the coordinate bounding box.
  for (size_t d = 0; d < dim; ++d) {
    Rational lo = points[0][d], hi = points[0][d];
    for (const auto& p : points) {
      if (p[d] < lo) lo = p[d];
      if (p[d] > hi) hi = p[d];
    }
    if (q[d] < lo || q[d] > hi) return false;
  }

  const size_t m = dim + 1;          // equality rows (+ convexity row)
  const size_t n = points.size();    // lambda columns
  const size_t ncols = n + m;        // plus artificials

  // Tableau rows [A | b] with b >= 0; artificial basis.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(ncols, Rational(0)));
  std::vector<Rational> rhs(m);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = points[j][i];
    rhs[i] = q[i];
  }
  for (size_t j = 0; j < n; ++j) T[dim][j] = 1;
  rhs[dim] = 1;
  for (size_t i = 0; i < m; ++i) {
    if (sgn(rhs[i]) < 0) {
      for (size_t j = 0; j < n; ++j) T[i][j] = -T[i][j];
      rhs[i] = -rhs[i];
    }
    T[i][n + i] = 1;
  }

  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase-1 reduced costs: cost 1 on artificials, 0 on lambdas.
  std::vector<Rational> red(ncols, Rational(0));
  Rational obj(0);
  for (size_t j = 0; j < ncols; ++j) {
    Rational colsum(0);
    for (size_t i = 0; i < m; ++i) colsum += T[i][j];
    red[j] = (j >= n ? Rational(1) : Rational(0)) - colsum;
  }
  for (size_t i = 0; i < m; ++i) obj += rhs[i];

  while (true) {
    // Bland: smallest-index column with negative reduced cost.
    size_t enter = ncols;
    for (size_t j = 0; j < ncols; ++j)
      if (sgn(red[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == ncols) break;  // optimal

    size_t leave = m;
    Rational best_ratio(0);
    for (size_t i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rational ratio = rhs[i] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 simplex became unbounded");

    // Pivot on (leave, enter).
    Rational piv = T[leave][enter];
    for (size_t j = 0; j < ncols; ++j) T[leave][j] /= piv;
    rhs[leave] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      Rational f = T[i][enter];
      for (size_t j = 0; j < ncols; ++j) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (sgn(red[enter]) != 0) {
      Rational f = red[enter];
      for (size_t j = 0; j < ncols; ++j) red[j] -= f * T[leave][j];
      obj -= f * rhs[leave];
    }
    basis[leave] = enter;
  }
  return sgn(obj) == 0;
}

}  // namespace soscert
