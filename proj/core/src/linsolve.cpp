#include "soscert/linsolve.hpp"

#include <stdexcept>

namespace soscert {

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M,
                                                  std::vector<Rational> rhs) {
  const size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw std::invalid_argument("solve_square requires a square matrix");
  if (rhs.size() != n) throw std::invalid_argument("right-hand side length mismatch");

  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && sgn(M[piv][k]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      std::swap(rhs[piv], rhs[k]);
    }
    Rational d = M[k][k];
    for (size_t j = k; j < n; ++j) M[k][j] /= d;
    rhs[k] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || sgn(M[i][k]) == 0) continue;
      Rational f = M[i][k];
      for (size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  return rhs;
}

bool reduce_rows(std::vector<std::vector<Rational>>& A, std::vector<Rational>& b) {
  if (A.size() != b.size()) throw std::invalid_argument("row count mismatch");
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && sgn(A[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::swap(b[piv], b[rank]);
    Rational d = A[rank][col];
    for (size_t j = col; j < cols; ++j) A[rank][j] /= d;
    b[rank] /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(A[i][col]) == 0) continue;
      Rational f = A[i][col];
      for (size_t j = col; j < cols; ++j) A[i][j] -= f * A[rank][j];
      b[i] -= f * b[rank];
    }
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (sgn(b[i]) != 0) return false;
  A.resize(rank);
  b.resize(rank);
  return true;
}

std::optional<std::vector<Rational>> project_affine(const std::vector<std::vector<Rational>>& A_in,
                                                    const std::vector<Rational>& b_in,
                                                    const std::vector<Rational>& x0) {
  std::vector<std::vector<Rational>> A = A_in;
  std::vector<Rational> b = b_in;
  if (!reduce_rows(A, b)) return std::nullopt;
  const size_t m = A.size();
  if (m == 0) return x0;
  const size_t n = x0.size();

  // KKT: x = x0 + A^T lam with (A A^T) lam = b - A x0.
  std::vector<std::vector<Rational>> AAT(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      Rational s(0);
      for (size_t k = 0; k < n; ++k)
        if (sgn(A[i][k]) != 0 && sgn(A[j][k]) != 0) s += A[i][k] * A[j][k];
      AAT[i][j] = s;
      AAT[j][i] = s;
    }
  std::vector<Rational> rhs(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    Rational s(0);
    for (size_t k = 0; k < n; ++k)
      if (sgn(A[i][k]) != 0) s += A[i][k] * x0[k];
    rhs[i] = b[i] - s;
  }
  auto lam = solve_square(AAT, rhs);
  if (!lam) return std::nullopt;  // reduced rows are independent, so this is unreachable
  std::vector<Rational> x = x0;
  for (size_t i = 0; i < m; ++i) {
    if (sgn((*lam)[i]) == 0) continue;
    for (size_t k = 0; k < n; ++k)
      if (sgn(A[i][k]) != 0) x[k] += A[i][k] * (*lam)[i];
  }
  return x;
}

}  // namespace soscert
