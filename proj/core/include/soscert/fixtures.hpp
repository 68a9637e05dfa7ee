#pragma once

#include "soscert/gram.hpp"
#include "soscert/polymatrix.hpp"
#include "soscert/separation.hpp"

namespace soscert {

// Bundled reference data: the certified convex-but-not-sos-convex
// trivariate octic together with the exact certificates for both sides,
// and the classical psd-but-not-sos companions used throughout the
// test and reproduction pipelines.
struct ReferenceExample {
  // 32x1^8 + 118x1^6x2^2 + ... + 30x3^8 (14 terms).
  Polynomial octic;
  // Second partial d^2 octic / dx1^2, a trivariate sextic, not sos.
  Polynomial octic_h11;
  // The 9-monomial support of octic_h11, in its listing order.
  MonomialBasis h11_support;
  // Exact dual functional over that support (thousandths).
  std::vector<Rational> h11_dual;
  // Pairing basis: all cubic monomials except x2^3, grouped by parity.
  MonomialBasis h11_pairing_basis;
  // Assembled separation certificate for octic_h11.
  SeparationCertificate h11_separation;

  // Gram certificate: (x1^2+x2^2+x3^2) * y'H(x)y equals the sum of the
  // four block quadratic forms, every block positive definite. H is the
  // Hessian of the octic; the target is stated over (x1,x2,x3,y1,y2,y3).
  GramCertificate hessian_certificate;

  // x1^4x2^2 + x1^2x2^4 - 3x1^2x2^2 + 1 and its homogenization.
  Polynomial motzkin;
  Polynomial motzkin_form;

  // The classical biquadratic 3x3 matrix: PSD everywhere, not an
  // sos-matrix, and not a valid Hessian.
  PolyMatrix biquadratic_matrix;
};

const ReferenceExample& reference_example();

}  // namespace soscert
