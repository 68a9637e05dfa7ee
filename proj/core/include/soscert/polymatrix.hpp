#pragma once

#include <vector>

#include "soscert/polynomial.hpp"

namespace soscert {

// Symmetric square matrix of polynomials. Symmetry is enforced on
// construction/assignment; all entries share the ambient arity.
class PolyMatrix {
 public:
  PolyMatrix() : dim_(0), nvars_(0) {}
  PolyMatrix(int dim, int nvars);

  int dim() const { return dim_; }
  int nvars() const { return nvars_; }

  const Polynomial& at(int i, int j) const;
  // Sets both (i,j) and (j,i).
  void set(int i, int j, Polynomial p);

  bool operator==(const PolyMatrix& o) const = default;

 private:
  int index(int i, int j) const;  // upper-triangle storage
  int dim_;
  int nvars_;
  std::vector<Polynomial> entries_;
};

// Matrix of second partials; symmetric because mixed partials commute.
PolyMatrix hessian(const Polynomial& p);

// Sum_ij y_i P(x)_ij y_j as a polynomial in nvars + dim variables;
// the y block is appended after the x block.
Polynomial quadratic_form_in_y(const PolyMatrix& P);

// Submatrix restricted to a row/column index set (principal block).
PolyMatrix principal_submatrix(const PolyMatrix& P, const std::vector<int>& index_set);

// Exact determinant via fraction-free Bareiss elimination.
Polynomial determinant(const PolyMatrix& P);

// General rectangular polynomial matrix, used by the Cauchy-Binet oracle.
struct PolyRectMatrix {
  int rows = 0, cols = 0, nvars = 0;
  std::vector<Polynomial> entries;  // row-major

  PolyRectMatrix() = default;
  PolyRectMatrix(int r, int c, int nv)
      : rows(r), cols(c), nvars(nv), entries(r * c, Polynomial(nv)) {}
  const Polynomial& at(int i, int j) const { return entries[i * cols + j]; }
  Polynomial& at(int i, int j) { return entries[i * cols + j]; }
};

// M^T M, always symmetric.
PolyMatrix gram_product(const PolyRectMatrix& M);

Polynomial determinant(const PolyRectMatrix& M);  // requires square

// det(M^T M) computed as the sum over column subsets of squared minors.
Polynomial cauchy_binet_det(const PolyRectMatrix& M);

}  // namespace soscert
