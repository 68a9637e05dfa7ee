#include "soscert/search.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "soscert/fixtures.hpp"
#include "soscert/newton.hpp"

namespace soscert {

CoeffVector hyperplane_from_projection(const Polynomial& form, double tol) {
  SosProjection proj = project_onto_sos(form, projection_blocks(form), tol);
  if (proj.status != SdpStatus::optimal)
    throw std::runtime_error("projection solve failed: " + proj.message);
  double target_norm = 0;
  for (const auto& [m, c] : form.terms()) target_norm += to_double(c) * to_double(c);
  if (proj.distance <= 1e-6 * (1.0 + std::sqrt(target_norm)))
    throw AlreadySosError("the form is already a sum of squares; the hyperplane vanishes");
  return proj.hyperplane;
}

CoeffVector hyperplane_from_infeasibility(const Polynomial& form, double tol) {
  SosFeasibility feas = sos_feasibility(form, sos_blocks(form), tol);
  if (feas.status != SdpStatus::optimal)
    throw std::runtime_error("sos feasibility solve failed: " + feas.message);
  if (feas.is_sos)
    throw AlreadySosError("the form is a sum of squares; no separating dual exists");
  return feas.dual;
}

namespace {

// Coefficients of the searched form enter the program linearly; this maps
// every row monomial to its free-variable coefficients.
using LinearMap = std::map<Monomial, std::map<int, double>, MonomialLess>;

void accumulate(LinearMap& L, const Polynomial& poly, int var) {
  for (const auto& [m, c] : poly.terms()) L[m][var] += to_double(c);
}

CoeffVector default_mu(const SearchConfig& cfg) {
  if (cfg.dual_mu) return *cfg.dual_mu;
  if (cfg.nvars != 3)
    throw std::invalid_argument(
        "no default dual functional outside three variables; provide dual_mu");
  return hyperplane_from_projection(reference_example().motzkin_form, cfg.tol);
}

void validate(const SearchConfig& cfg) {
  if (cfg.degree % 2 != 0 || cfg.degree < 4) throw std::invalid_argument("degree must be even and >= 4");
  if (cfg.multiplier_r < 1) throw std::invalid_argument("multiplier exponent must be >= 1");
  if (cfg.margin <= 0) throw std::invalid_argument("margin must be positive");
  if (cfg.mode == "convex") {
    if (cfg.target_minor.size() != 1)
      throw std::invalid_argument("only single-entry diagonal minors are linear in the "
                                  "coefficients; target_minor must have exactly one index");
    int i = cfg.target_minor[0];
    if (i < 0 || i >= cfg.nvars) throw std::invalid_argument("target_minor index out of range");
  } else if (cfg.mode != "psd-not-sos") {
    throw std::invalid_argument("unknown search mode '" + cfg.mode + "'");
  }
}

// Gram blocks whose products cover a homogeneous degree-2k target that is
// quadratic in the y block: all x^a y_i with |a| = k - 1.
std::vector<MonomialBasis> hessian_form_blocks(int n, int half_degree) {
  MonomialBasis xs = monomial_basis(n, half_degree - 1, /*homogeneous=*/true);
  std::vector<Monomial> monos;
  for (const auto& b : xs.monomials()) {
    for (int i = 0; i < n; ++i) {
      Monomial m = Monomial::unit(2 * n);
      for (int v = 0; v < n; ++v) m[v] = b[v];
      m[n + i] = 1;
      monos.push_back(m);
    }
  }
  MonomialBasis joint(2 * n, std::move(monos));
  return parity_split(joint, paired_variable_groups(n));
}

struct ProgramRows {
  std::map<Monomial, int, MonomialLess> row_of;
  std::vector<int> row_constraint;
};

// Shared assembly: Gram blocks + t on diagonal squares, minus the linear
// form of the candidate coefficients, all rows equal to zero.
ProgramRows assemble_rows(SearchProgram& prog, const LinearMap& L) {
  ProgramRows rows;
  for (size_t b = 0; b < prog.blocks.size(); ++b) {
    const auto& basis = prog.blocks[b];
    for (int i = 0; i < basis.size(); ++i)
      for (int j = i; j < basis.size(); ++j) rows.row_of.emplace(basis[i] * basis[j], -1);
  }
  for (const auto& [m, coeffs] : L) rows.row_of.emplace(m, -1);

  for (auto& [m, idx] : rows.row_of) {
    SdpConstraint con;
    con.rhs = 0.0;
    idx = static_cast<int>(prog.sdp.constraints.size());
    prog.sdp.constraints.push_back(std::move(con));
    rows.row_constraint.push_back(idx);
  }
  // Gram entries.
  for (size_t b = 0; b < prog.blocks.size(); ++b) {
    const auto& basis = prog.blocks[b];
    for (int i = 0; i < basis.size(); ++i) {
      for (int j = i; j < basis.size(); ++j) {
        int row = rows.row_of.at(basis[i] * basis[j]);
        prog.sdp.constraints[row].matrix_terms.push_back({prog.block_ids[b], i, j, 1.0});
      }
    }
  }
  // Minimum-eigenvalue shift: Q = Q~ + t I adds t on every diagonal square.
  for (size_t b = 0; b < prog.blocks.size(); ++b) {
    const auto& basis = prog.blocks[b];
    for (int i = 0; i < basis.size(); ++i) {
      int row = rows.row_of.at(basis[i] * basis[i]);
      auto& terms = prog.sdp.constraints[row].free_terms;
      bool found = false;
      for (auto& [idx, v] : terms)
        if (idx == prog.t_var) {
          v += 1.0;
          found = true;
        }
      if (!found) terms.push_back({prog.t_var, 1.0});
    }
  }
  // Candidate coefficients (moved to the left-hand side).
  for (const auto& [m, coeffs] : L) {
    int row = rows.row_of.at(m);
    for (const auto& [var, value] : coeffs)
      prog.sdp.constraints[row].free_terms.push_back({prog.coeff_vars[var], -value});
  }
  return rows;
}

}  // namespace

SearchProgram build_search_program(const SearchConfig& cfg) {
  validate(cfg);
  SearchProgram prog;
  prog.mu = default_mu(cfg);

  const int n = cfg.nvars;
  prog.candidate_monomials = monomial_basis(n, cfg.degree, /*homogeneous=*/true);
  for (int a = 0; a < prog.candidate_monomials.size(); ++a)
    prog.coeff_vars.push_back(prog.sdp.add_free());
  prog.t_var = prog.sdp.add_free();
  prog.sdp.objective_free[prog.t_var] = -1.0;  // max t

  LinearMap L;
  if (cfg.mode == "convex") {
    // (sum x^2)^r * y' H(x^a) y per candidate monomial.
    std::vector<int> xmap(n);
    for (int i = 0; i < n; ++i) xmap[i] = i;
    Polynomial mult = embed(sum_of_squares_multiplier(n, cfg.multiplier_r), 2 * n, xmap);
    for (int a = 0; a < prog.candidate_monomials.size(); ++a) {
      Polynomial mono(n);
      mono.add_term(prog.candidate_monomials[a], Rational(1));
      Polynomial qa = quadratic_form_in_y(hessian(mono)) * mult;
      accumulate(L, qa, a);
    }
    prog.blocks = hessian_form_blocks(n, (cfg.degree + 2 * cfg.multiplier_r) / 2);
  } else {
    Polynomial mult = sum_of_squares_multiplier(n, cfg.multiplier_r);
    for (int a = 0; a < prog.candidate_monomials.size(); ++a) {
      Polynomial mono(n);
      mono.add_term(prog.candidate_monomials[a], Rational(1));
      accumulate(L, mono * mult, a);
    }
    prog.blocks = {monomial_basis(n, (cfg.degree + 2 * cfg.multiplier_r) / 2,
                                  /*homogeneous=*/true)};
  }
  for (const auto& b : prog.blocks) prog.block_ids.push_back(prog.sdp.add_block(b.size()));

  assemble_rows(prog, L);

  // Margin: <mu, target form> + slack = -margin, slack >= 0 (1x1 block).
  SdpConstraint margin;
  int slack = prog.sdp.add_block(1);
  margin.matrix_terms.push_back({slack, 0, 0, 1.0});
  margin.rhs = -cfg.margin;
  for (int a = 0; a < prog.candidate_monomials.size(); ++a) {
    const Monomial& alpha = prog.candidate_monomials[a];
    double coeff = 0.0;
    if (cfg.mode == "convex") {
      int i = cfg.target_minor[0];
      if (alpha[i] >= 2) {
        Monomial dm(alpha);
        dm[i] -= 2;
        coeff = alpha[i] * (alpha[i] - 1) * prog.mu.at(dm);
      }
    } else {
      coeff = prog.mu.at(alpha);
    }
    if (coeff != 0.0) margin.free_terms.push_back({prog.coeff_vars[a], coeff});
  }
  prog.margin_row = static_cast<int>(prog.sdp.constraints.size());
  prog.sdp.constraints.push_back(std::move(margin));
  return prog;
}

Polynomial postprocess_rationalize(const CoeffVector& candidate, bool scale_search,
                                   const std::function<bool(const Polynomial&)>& accept,
                                   std::vector<std::string>* diagnostics) {
  double max_abs = 0;
  for (const auto& [m, v] : candidate.values) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0) throw std::invalid_argument("degenerate candidate: all coefficients vanish");

  std::vector<double> scales = {1.0};
  if (scale_search)
    for (double k : {32.0, 50.0, 64.0, 100.0, 150.0, 200.0}) scales.push_back(k / max_abs);

  std::set<std::string> seen;
  auto try_candidate = [&](const Polynomial& p) -> bool {
    if (p.is_zero()) return false;
    std::string key = p.to_text();
    if (!seen.insert(key).second) return false;
    bool ok = accept(p);
    if (diagnostics)
      diagnostics->push_back(std::string(ok ? "accepted: " : "rejected: ") + key);
    return ok;
  };

  for (double s : scales) {
    Polynomial p(candidate.nvars);
    for (const auto& [m, v] : candidate.values) {
      double scaled = v * s;
      long r = std::lround(scaled);
      if (r != 0) p.add_term(m, Rational(static_cast<long>(r)));
    }
    if (try_candidate(p)) return p;
  }
  if (scale_search) {
    // Diagonal coordinate scalings x_i -> 2 x_i, over the first two
    // magnitudes. Flagged in the diagnostics when reached.
    for (int var = 0; var < candidate.nvars; ++var) {
      for (size_t si = 0; si < scales.size() && si < 2; ++si) {
        Polynomial p(candidate.nvars);
        for (const auto& [m, v] : candidate.values) {
          long r = std::lround(v * std::pow(2.0, m[var]) * scales[si]);
          if (r != 0) p.add_term(m, Rational(static_cast<long>(r)));
        }
        if (diagnostics)
          diagnostics->push_back("trying diagonal scaling on variable " + std::to_string(var + 1));
        if (try_candidate(p)) return p;
      }
    }
  }
  throw std::runtime_error("no integer candidate within the search budget re-certified");
}

SearchResult search_counterexample(const SearchConfig& cfg) {
  SearchResult result;
  SearchConfig work = cfg;

  for (int attempt = 0;; ++attempt) {
    SearchProgram prog = build_search_program(work);
    result.mu_used = prog.mu;
    SdpSolution sol = solve(prog.sdp, work.tol, work.max_iter);
    result.solver_status = sol.status;
    result.diagnostics.push_back("r=" + std::to_string(work.multiplier_r) + ": solver " +
                                 to_string(sol.status) + ", t=" +
                                 std::to_string(sol.status == SdpStatus::optimal
                                                    ? sol.free_values[prog.t_var]
                                                    : 0.0));
    if (sol.status == SdpStatus::optimal) {
      result.candidate_numeric.nvars = cfg.nvars;
      result.candidate_numeric.values.clear();
      for (int a = 0; a < prog.candidate_monomials.size(); ++a) {
        double v = sol.free_values[prog.coeff_vars[a]];
        if (std::abs(v) > 1e-9)
          result.candidate_numeric.values[prog.candidate_monomials[a]] = v;
      }
      try {
        if (work.mode == "convex") {
          std::optional<SosConvexityReport> kept;
          SosConvexOptions copts;
          copts.tol = work.tol;
          copts.max_iter = work.max_iter;
          copts.convexity_r_cap = std::max(work.multiplier_r, work.r_escalation_cap);
          auto accept = [&](const Polynomial& p) {
            SosConvexityReport rep = is_sos_convex(p, copts);
            bool ok = rep.convex_certified && !rep.is_sos_convex && rep.negative_witness &&
                      rep.negative_report && rep.negative_report->pass &&
                      rep.convexity_certificate;
            if (ok) kept = std::move(rep);
            return ok;
          };
          result.candidate =
              postprocess_rationalize(result.candidate_numeric, work.scale_search, accept,
                                      &result.diagnostics);
          result.certified = std::move(kept);
          result.success = true;
        } else {
          std::optional<GramCertificate> psd_cert;
          std::optional<SeparationCertificate> sep_cert;
          auto accept = [&](const Polynomial& q) {
            // Not sos: exact separation from the dual of its own sos test.
            SosFeasibility feas = sos_feasibility(q, sos_blocks(q), work.tol, work.max_iter);
            if (feas.status != SdpStatus::optimal || feas.is_sos) return false;
            auto sep = rationalize_separation(q, feas.dual, feas.system.blocks);
            if (!sep) return false;
            // Psd: q * (sum x^2)^r is sos, certified exactly.
            Polynomial lifted = q * sum_of_squares_multiplier(q.nvars(), work.multiplier_r);
            SosFeasibility lift =
                sos_feasibility(lifted, sos_blocks(lifted), work.tol, work.max_iter);
            if (lift.status != SdpStatus::optimal || !lift.is_sos) return false;
            auto rational = rationalize_gram(lift.gram, lift.system);
            if (!rational) return false;
            GramCertificate cert;
            cert.target = q;
            cert.multiplier_r = work.multiplier_r;
            for (size_t b = 0; b < lift.system.blocks.size(); ++b)
              cert.blocks.push_back({lift.system.blocks[b], (*rational)[b]});
            if (!verify_certificate(cert).pass) return false;
            psd_cert = std::move(cert);
            sep_cert = std::move(*sep);
            return true;
          };
          result.candidate =
              postprocess_rationalize(result.candidate_numeric, work.scale_search, accept,
                                      &result.diagnostics);
          result.psd_certificate = std::move(psd_cert);
          result.not_sos_certificate = std::move(sep_cert);
          result.success = true;
        }
        return result;
      } catch (const std::exception& e) {
        result.diagnostics.push_back(std::string("post-processing failed: ") + e.what());
      }
    }
    if (work.multiplier_r >= cfg.r_escalation_cap || sol.status == SdpStatus::primal_infeasible)
      return result;
    ++work.multiplier_r;
  }
}

}  // namespace soscert
