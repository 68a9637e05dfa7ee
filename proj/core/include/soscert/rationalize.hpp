#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "soscert/gram.hpp"

namespace soscert {

struct RationalizeOptions {
  // Bounded-denominator rounding, doubled on retry.
  Integer initial_denominator = Integer(1000000);
  Integer max_denominator = Integer("1000000000000");
  // When plain rounding+projection fails, retry with kernel constraints
  // recovered from the near-null eigenvectors of the numeric solution.
  // Needed for targets on the boundary of the sos cone, whose Gram
  // matrices are forced to be singular.
  bool kernel_stage = true;
  double kernel_tol = 1e-5;
};

// Rounds a numeric per-block Gram solution to rationals with bounded
// denominators, projects exactly onto the affine solution set of the
// system, and accepts iff every projected block passes the exact PSD
// check. Returns the blocks of the certificate, or nullopt (with a
// reason) when no denominator bound in the ladder works.
std::optional<std::vector<RationalMatrix>> rationalize_gram(
    const std::vector<Eigen::MatrixXd>& Q_numeric, const GramSystem& system,
    const RationalizeOptions& opts = {}, std::string* failure_reason = nullptr);

}  // namespace soscert
