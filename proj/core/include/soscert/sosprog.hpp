#pragma once

#include <map>

#include "soscert/gram.hpp"
#include "soscert/parity.hpp"
#include "soscert/sdp.hpp"

namespace soscert {

// Numeric linear functional / coefficient vector over a monomial space.
struct CoeffVector {
  int nvars = 0;
  std::map<Monomial, double, MonomialLess> values;

  double at(const Monomial& m) const {
    auto it = values.find(m);
    return it == values.end() ? 0.0 : it->second;
  }
  double dot(const Polynomial& p) const;
  double norm() const;
  void normalize();
};

// Builds the Gram block bases for an sos test of `target`: a degree-d/2
// basis (homogeneous when the target is), Newton-filtered, then split by
// the sign-flip symmetries of the target among the candidate groups.
// Splitting requires invariance under every candidate group; otherwise a
// single block is returned.
std::vector<MonomialBasis> sos_blocks(const Polynomial& target,
                                      const std::vector<VariableGroup>& candidate_groups);
std::vector<MonomialBasis> sos_blocks(const Polynomial& target);  // single-variable flips

// Solves max t s.t. target = sum z' Q z, Q - t I >= 0 per block.
// Verdict: sos iff the optimum satisfies t >= -tol. In the not-sos case
// the dual multipliers give a functional that separates the target from
// the sos cone over these blocks.
struct SosFeasibility {
  bool is_sos = false;
  double t_opt = 0.0;
  SdpStatus status = SdpStatus::max_iter;
  GramSystem system;
  std::vector<Eigen::MatrixXd> gram;  // Q per block at the optimum
  CoeffVector dual;                   // over all row monomials
  CoeffVector dual_on_support;        // restricted to the target support, unit norm
  std::vector<Eigen::MatrixXd> dual_moment;  // moment matrix of `dual` per block
  int iterations = 0;
  std::string message;
};

SosFeasibility sos_feasibility(const Polynomial& target, const std::vector<MonomialBasis>& blocks,
                               double tol = 1e-8, int max_iter = 200);

// Euclidean projection of the target onto the sos cone in the
// coefficient 2-norm, via the standard epigraph (arrow-matrix) block.
// hyperplane = (projection - target)/||.||, a functional supporting the
// cone at the projection: it pairs nonnegatively with every sos form and
// strictly negatively with a non-sos target.
struct SosProjection {
  SdpStatus status = SdpStatus::max_iter;
  double distance = 0.0;
  CoeffVector projection;
  CoeffVector hyperplane;
  std::string message;
};

SosProjection project_onto_sos(const Polynomial& target, const std::vector<MonomialBasis>& blocks,
                               double tol = 1e-8, int max_iter = 200);

// Blocks for the projection program: never Newton-filtered (the sos side
// ranges over the whole cone), split only by the target's symmetries.
std::vector<MonomialBasis> projection_blocks(const Polynomial& target);

}  // namespace soscert
