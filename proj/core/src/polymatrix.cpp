#include "soscert/polymatrix.hpp"

#include <numeric>
#include <stdexcept>

namespace soscert {

PolyMatrix::PolyMatrix(int dim, int nvars) : dim_(dim), nvars_(nvars) {
  if (dim < 0) throw std::invalid_argument("matrix dimension must be >= 0");
  entries_.assign(dim * (dim + 1) / 2, Polynomial(nvars));
}

int PolyMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("matrix index");
  if (i > j) std::swap(i, j);
  return i * dim_ - i * (i - 1) / 2 + (j - i);
}

const Polynomial& PolyMatrix::at(int i, int j) const { return entries_[index(i, j)]; }

void PolyMatrix::set(int i, int j, Polynomial p) {
  if (p.nvars() != nvars_) throw std::invalid_argument("entry arity mismatch");
  entries_[index(i, j)] = std::move(p);
}

PolyMatrix hessian(const Polynomial& p) {
  int n = p.nvars();
  PolyMatrix H(n, n);
  for (int i = 0; i < n; ++i) {
    Polynomial di = p.differentiate(i);
    for (int j = i; j < n; ++j) H.set(i, j, di.differentiate(j));
  }
  return H;
}

Polynomial quadratic_form_in_y(const PolyMatrix& P) {
  int n = P.nvars();
  int m = P.dim();
  int total = n + m;
  std::vector<int> xmap(n);
  std::iota(xmap.begin(), xmap.end(), 0);
  Polynomial out(total);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Polynomial entry = embed(P.at(i, j), total, xmap);
      Monomial yy = Monomial::unit(total);
      yy[n + i] += 1;
      yy[n + j] += 1;
      Polynomial ypart(total);
      ypart.add_term(yy, Rational(i == j ? 1 : 2));
      out = out + entry * ypart;
    }
  }
  return out;
}

PolyMatrix principal_submatrix(const PolyMatrix& P, const std::vector<int>& index_set) {
  PolyMatrix S(static_cast<int>(index_set.size()), P.nvars());
  for (size_t i = 0; i < index_set.size(); ++i)
    for (size_t j = i; j < index_set.size(); ++j)
      S.set(static_cast<int>(i), static_cast<int>(j), P.at(index_set[i], index_set[j]));
  return S;
}

namespace {

// Fraction-free Bareiss elimination; divisions are exact by the
// Sylvester identity. Rows are swapped when a pivot vanishes.
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> a, int n, int nvars) {
  if (n == 0) return Polynomial::constant(nvars, Rational(1));
  int sign = 1;
  Polynomial prev_pivot = Polynomial::constant(nvars, Rational(1));
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return Polynomial(nvars);  // singular
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = try_exact_divide(num, prev_pivot);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Polynomial(nvars);
    }
    prev_pivot = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& P) {
  int n = P.dim();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(P.nvars())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = P.at(i, j);
  return bareiss_det(std::move(a), n, P.nvars());
}

Polynomial determinant(const PolyRectMatrix& M) {
  if (M.rows != M.cols) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::vector<Polynomial>> a(M.rows, std::vector<Polynomial>(M.cols, Polynomial(M.nvars)));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) a[i][j] = M.at(i, j);
  return bareiss_det(std::move(a), M.rows, M.nvars);
}

PolyMatrix gram_product(const PolyRectMatrix& M) {
  PolyMatrix P(M.cols, M.nvars);
  for (int i = 0; i < M.cols; ++i) {
    for (int j = i; j < M.cols; ++j) {
      Polynomial sum(M.nvars);
      for (int k = 0; k < M.rows; ++k) sum = sum + M.at(k, i) * M.at(k, j);
      P.set(i, j, sum);
    }
  }
  return P;
}

Polynomial cauchy_binet_det(const PolyRectMatrix& M) {
  int s = M.rows, m = M.cols;
  Polynomial total(M.nvars);
  if (s < m) return total;  // too few rows: det(M^T M) = 0
  std::vector<int> subset(m);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    PolyRectMatrix sq(m, m, M.nvars);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sq.at(i, j) = M.at(subset[i], j);
    Polynomial d = determinant(sq);
    total = total + d * d;
    // next m-combination of {0..s-1}
    int i = m - 1;
    while (i >= 0 && subset[i] == s - m + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

}  // namespace soscert
