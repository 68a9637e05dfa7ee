#pragma once

#include "soscert/convexity.hpp"

namespace soscert {

struct SosConvexOptions {
  double tol = 1e-8;
  int max_iter = 200;
  int convexity_r_cap = 3;        // multiplier exponents tried for convexity
  bool exact_certificates = true;
  RationalizeOptions rationalize;
};

// Full sos-convexity analysis of a polynomial.
//   is_sos_convex     : the Hessian is an sos-matrix (r = 0 test).
//   convex_certified  : (sum x_i^2)^r y'Hy sos for some r in 1..cap.
//                       Absence of a certificate is inconclusive, never
//                       a proof of non-convexity.
// Negative witness when not sos-convex: an exactly verified separation
// certificate for some principal minor of the Hessian, or for the
// quadratic form y'Hy itself; failing that, the numeric dual only.
struct SosConvexityReport {
  bool is_sos_convex = false;
  std::optional<GramCertificate> sos_matrix_certificate;

  bool convex_certified = false;
  int convexity_r = 0;  // the exponent that certified convexity
  std::optional<GramCertificate> convexity_certificate;

  std::vector<int> separated_minor;  // empty when the joint form was separated
  std::optional<SeparationCertificate> negative_witness;
  std::optional<SeparationReport> negative_report;
  std::optional<CoeffVector> numeric_dual;  // fallback when exactness failed

  double hessian_sos_margin = 0.0;  // optimal t of the r = 0 program
  std::string notes;
};

SosConvexityReport is_sos_convex(const Polynomial& p, const SosConvexOptions& opts = {});

}  // namespace soscert
