#pragma once

#include <functional>
#include <optional>

#include "soscert/sosconvex.hpp"

namespace soscert {

struct AlreadySosError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Supporting functional of the sos cone from the Euclidean projection of
// a non-sos form: pairs < 0 with the form, >= 0 with every sos form.
// Throws AlreadySosError when the form is (numerically) in the cone.
CoeffVector hyperplane_from_projection(const Polynomial& form, double tol = 1e-8);

// Same, recovered from the dual multipliers of the infeasible sos test.
CoeffVector hyperplane_from_infeasibility(const Polynomial& form, double tol = 1e-8);

struct SearchConfig {
  int nvars = 3;
  int degree = 8;            // even
  int multiplier_r = 1;      // >= 1
  double margin = 1.0;       // strict inequality realized as <= -margin
  std::vector<int> target_minor = {0};  // 0-based diagonal index; size one
  std::optional<CoeffVector> dual_mu;   // defaults to the projection hyperplane
  std::string mode = "convex";          // "convex" | "psd-not-sos"
  double tol = 1e-8;
  int max_iter = 300;
  int r_escalation_cap = 2;  // retry the sos constraint with r+1 once
  bool scale_search = true;  // integer post-processing tries several scales
};

// The assembled feasibility program together with the bookkeeping needed
// to read the answer back.
struct SearchProgram {
  SdpProblem sdp;
  MonomialBasis candidate_monomials;  // coefficient order of the searched form
  std::vector<int> coeff_vars;        // free-variable index per monomial
  int t_var = -1;                     // min-eigenvalue epigraph variable
  std::vector<MonomialBasis> blocks;  // Gram block bases
  std::vector<int> block_ids;
  int margin_row = -1;
  CoeffVector mu;                     // the functional actually used
};

// SOS feasibility program: candidate coefficients free, the multiplied
// Hessian form sos with minimum Gram eigenvalue t (maximized), and
// <mu, H_minor> <= -margin.
SearchProgram build_search_program(const SearchConfig& cfg);

struct SearchResult {
  bool success = false;
  SdpStatus solver_status = SdpStatus::max_iter;
  CoeffVector candidate_numeric;
  Polynomial candidate;  // certified integer-coefficient form
  std::optional<SosConvexityReport> certified;  // convex mode
  // psd-not-sos mode certificates:
  std::optional<GramCertificate> psd_certificate;
  std::optional<SeparationCertificate> not_sos_certificate;
  CoeffVector mu_used;
  std::vector<std::string> diagnostics;
};

SearchResult search_counterexample(const SearchConfig& cfg);

// Rounds a numeric candidate to integer coefficients (over a ladder of
// magnitudes and optional diagonal variable scalings) and keeps the
// first one whose exact certification matches `accept`. Throws when the
// input is degenerate or no candidate in the budget certifies.
Polynomial postprocess_rationalize(
    const CoeffVector& candidate, bool scale_search,
    const std::function<bool(const Polynomial&)>& accept,
    std::vector<std::string>* diagnostics = nullptr);

}  // namespace soscert
