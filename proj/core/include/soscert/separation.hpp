#pragma once

#include <optional>

#include "soscert/basis.hpp"
#include "soscert/ldlt.hpp"
#include "soscert/sosprog.hpp"

namespace soscert {

// Exact dual-functional certificate that `target` is not a sum of
// squares over the span of `subspace`: a rational vector c with
// <c, target> < 0 whose moment matrix over the pairing basis z is PSD.
struct SeparationCertificate {
  Polynomial target;
  MonomialBasis subspace;       // S; c is indexed by it
  std::vector<Rational> dual;   // c
  MonomialBasis pairing_basis;  // z
};

// Entry (i,j) is the c-value of z_i * z_j when that monomial lies in the
// subspace, else zero.
RationalMatrix moment_matrix(const std::vector<Rational>& c, const MonomialBasis& subspace,
                             const MonomialBasis& z);

struct SeparationReport {
  Rational pairing;          // <c, target>, exact
  bool pairing_negative = false;
  bool target_in_subspace = false;
  LdlResult moment;          // exact PSD check of the moment matrix
  // The pairing basis must contain every monomial whose square lies in
  // the Newton polytope of the subspace; otherwise an sos form over S
  // could escape the moment-matrix argument.
  bool basis_adequate = false;
  std::vector<Monomial> missing_basis_monomials;
  bool pass = false;
};

SeparationReport verify_separation(const SeparationCertificate& cert);

// Rounds a numeric dual functional into an exact certificate and keeps
// it only if verify_separation passes. The subspace is the target
// support widened by every within-block product of the bases that
// produced the dual.
std::optional<SeparationCertificate> rationalize_separation(
    const Polynomial& target, const CoeffVector& dual,
    const std::vector<MonomialBasis>& blocks, const Integer& initial_den = Integer(1000),
    const Integer& max_den = Integer(1000000000));

}  // namespace soscert
