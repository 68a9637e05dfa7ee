#pragma once

#include <optional>

#include "soscert/gram.hpp"
#include "soscert/polymatrix.hpp"
#include "soscert/rationalize.hpp"
#include "soscert/separation.hpp"
#include "soscert/sosprog.hpp"

namespace soscert {

// Commuting-third-partials test: a symmetric polynomial matrix is a
// matrix of second derivatives iff d P_ij / d x_k == d P_ik / d x_j.
struct HessianValidity {
  bool valid = true;
  int i = -1, j = -1, k = -1;  // first violated triple
  Polynomial lhs, rhs;         // the two mismatched partials
};
HessianValidity is_valid_hessian(const PolyMatrix& P);

struct SosMatrixOptions {
  double tol = 1e-8;
  int max_iter = 200;
  bool exact_certificate = true;  // rationalize the Gram data on success
  RationalizeOptions rationalize;
};

// Tests whether (sum_i x_i^2)^r * y' P(x) y is a sum of squares in
// [x; y]. r = 0 is the sos-matrix test; r >= 1 certifies that P(x) is
// PSD for every x.
struct SosMatrixResult {
  bool is_sos = false;                // numeric verdict (t >= -tol)
  Polynomial form;                    // the tested polynomial in [x; y]
  SosFeasibility feasibility;
  std::optional<GramCertificate> certificate;  // exact, verified
};
SosMatrixResult is_sos_matrix(const PolyMatrix& P, int multiplier_r = 0,
                              const SosMatrixOptions& opts = {});

// All principal minors (or only those of the given order), as pairs of
// the index set and the exact determinant.
std::vector<std::pair<std::vector<int>, Polynomial>> principal_minors(
    const PolyMatrix& P, std::optional<int> order = std::nullopt);

}  // namespace soscert
