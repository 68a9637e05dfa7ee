#pragma once

#include <string>
#include <vector>

#include "soscert/rational.hpp"

namespace soscert {

// Dense square rational matrix, row-major vectors.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix rational_identity(int n);
bool is_symmetric(const RationalMatrix& Q);

enum class PsdVerdict { positive_definite, positive_semidefinite, indefinite };

// Exact P^T Q P = L D L^T with largest-diagonal pivoting. The verdict is
// decided by the pivot signs: all positive means positive definite; a
// zero pivot is accepted only when its entire remaining row is zero,
// otherwise the matrix is indefinite.
struct LdlResult {
  PsdVerdict verdict = PsdVerdict::indefinite;
  std::vector<int> permutation;       // position i holds original index perm[i]
  RationalMatrix L;                   // unit lower triangular
  std::vector<Rational> pivots;       // diagonal D (zero-padded past the rank)
  int rank = 0;
  std::string failure;                // populated when indefinite

  bool is_psd() const { return verdict != PsdVerdict::indefinite; }
};

LdlResult rational_psd_check(const RationalMatrix& Q);

}  // namespace soscert
