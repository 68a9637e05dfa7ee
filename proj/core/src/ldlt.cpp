#include "soscert/ldlt.hpp"

#include <stdexcept>

namespace soscert {

RationalMatrix rational_identity(int n) {
  RationalMatrix I(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

bool is_symmetric(const RationalMatrix& Q) {
  size_t n = Q.size();
  for (const auto& row : Q)
    if (row.size() != n) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (Q[i][j] != Q[j][i]) return false;
  return true;
}

LdlResult rational_psd_check(const RationalMatrix& Q) {
  if (!is_symmetric(Q)) throw std::invalid_argument("psd check requires a symmetric matrix");
  const int n = static_cast<int>(Q.size());

  RationalMatrix A = Q;
  LdlResult res;
  res.permutation.resize(n);
  for (int i = 0; i < n; ++i) res.permutation[i] = i;
  res.L = rational_identity(n);
  res.pivots.assign(n, Rational(0));

  for (int k = 0; k < n; ++k) {
    // Largest remaining diagonal entry.
    int best = k;
    for (int i = k + 1; i < n; ++i)
      if (A[i][i] > A[best][best]) best = i;

    if (best != k) {
      std::swap(res.permutation[k], res.permutation[best]);
      for (int j = 0; j < n; ++j) std::swap(A[k][j], A[best][j]);
      for (int i = 0; i < n; ++i) std::swap(A[i][k], A[i][best]);
      for (int j = 0; j < k; ++j) std::swap(res.L[k][j], res.L[best][j]);
    }

    const Rational& d = A[k][k];
    if (sgn(d) < 0) {
      res.verdict = PsdVerdict::indefinite;
      res.failure = "negative diagonal " + to_string(d) + " at elimination step " +
                    std::to_string(k);
      return res;
    }
    if (sgn(d) == 0) {
      // Every remaining diagonal is <= 0, hence exactly 0 here. The block
      // must vanish entirely for the matrix to be PSD.
      for (int i = k; i < n; ++i) {
        if (sgn(A[i][i]) < 0) {
          res.verdict = PsdVerdict::indefinite;
          res.failure = "negative diagonal " + to_string(A[i][i]) + " at elimination step " +
                        std::to_string(k);
          return res;
        }
        for (int j = i + 1; j < n; ++j) {
          if (sgn(A[i][j]) != 0) {
            res.verdict = PsdVerdict::indefinite;
            res.failure = "zero pivot with nonzero off-diagonal entry at elimination step " +
                          std::to_string(k);
            return res;
          }
        }
      }
      break;  // trailing zero block
    }

    res.pivots[k] = d;
    res.rank = k + 1;
    for (int i = k + 1; i < n; ++i) res.L[i][k] = A[i][k] / d;
    for (int i = k + 1; i < n; ++i) {
      if (sgn(A[i][k]) == 0) continue;
      for (int j = k + 1; j < n; ++j) A[i][j] -= res.L[i][k] * A[k][j];
    }
    for (int i = k + 1; i < n; ++i) {
      A[i][k] = 0;
      A[k][i] = 0;
    }
  }

  res.verdict = (res.rank == n) ? PsdVerdict::positive_definite : PsdVerdict::positive_semidefinite;
  return res;
}

}  // namespace soscert
