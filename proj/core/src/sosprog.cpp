#include "soscert/sosprog.hpp"

#include <cmath>

#include "soscert/newton.hpp"

namespace soscert {

double CoeffVector::dot(const Polynomial& p) const {
  double s = 0;
  for (const auto& [m, c] : p.terms()) s += at(m) * to_double(c);
  return s;
}

double CoeffVector::norm() const {
  double s = 0;
  for (const auto& [m, v] : values) s += v * v;
  return std::sqrt(s);
}

void CoeffVector::normalize() {
  double n = norm();
  if (n == 0) return;
  for (auto& [m, v] : values) v /= n;
}

std::vector<MonomialBasis> sos_blocks(const Polynomial& target,
                                      const std::vector<VariableGroup>& candidate_groups) {
  if (target.is_zero()) return {};
  int d = *target.degree();
  MonomialBasis basis = monomial_basis(target.nvars(), d / 2, target.is_homogeneous());
  basis = newton_filter(target, basis);
  bool invariant = !candidate_groups.empty() && parity_invariant(target, candidate_groups);
  if (!invariant) return {basis};
  auto split = parity_split(basis, candidate_groups);
  std::vector<MonomialBasis> out;
  for (auto& b : split)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

std::vector<MonomialBasis> sos_blocks(const Polynomial& target) {
  return sos_blocks(target, single_variable_groups(target.nvars()));
}

namespace {

// Gram-matching rows of the SDP, shared by the feasibility and
// projection programs. Entry value 1.0: the symmetric-term convention
// already doubles off-diagonal contributions.
void add_gram_rows(SdpProblem& prob, const GramSystem& sys,
                   const std::vector<int>& block_ids, std::vector<int>& row_constraint) {
  row_constraint.assign(sys.row_monomials.size(), -1);
  for (size_t r = 0; r < sys.row_monomials.size(); ++r) {
    SdpConstraint con;
    for (int v : sys.row_vars[r]) {
      auto [i, j] = sys.entry_of_var(v);
      con.matrix_terms.push_back({block_ids[sys.block_of_var(v)], i, j, 1.0});
    }
    con.rhs = to_double(sys.rhs[r]);
    row_constraint[r] = static_cast<int>(prob.constraints.size());
    prob.constraints.push_back(std::move(con));
  }
}

}  // namespace

SosFeasibility sos_feasibility(const Polynomial& target, const std::vector<MonomialBasis>& blocks,
                               double tol, int max_iter) {
  SosFeasibility out;
  out.system = gram_system(target, blocks);
  const GramSystem& sys = out.system;

  SdpProblem prob;
  std::vector<int> block_ids;
  for (const auto& b : sys.blocks) block_ids.push_back(prob.add_block(b.size()));
  int t_var = prob.add_free();
  prob.objective_free[t_var] = -1.0;  // max t

  std::vector<int> row_constraint;
  add_gram_rows(prob, sys, block_ids, row_constraint);
  // Q = Q~ + t I: the identity contributes t to every diagonal product row.
  for (size_t b = 0; b < sys.blocks.size(); ++b) {
    for (int i = 0; i < sys.blocks[b].size(); ++i) {
      int v = sys.var_index(static_cast<int>(b), i, i);
      auto& con = prob.constraints[row_constraint[sys.var_row[v]]];
      bool found = false;
      for (auto& [idx, val] : con.free_terms)
        if (idx == t_var) {
          val += 1.0;
          found = true;
        }
      if (!found) con.free_terms.push_back({t_var, 1.0});
    }
  }

  SdpSolution sol = solve(prob, tol, max_iter);
  out.status = sol.status;
  out.iterations = sol.iterations;
  out.message = sol.message;
  if (sol.status != SdpStatus::optimal) {
    out.is_sos = false;
    return out;
  }

  out.t_opt = sol.free_values[t_var];
  out.is_sos = out.t_opt >= -tol;
  out.gram.resize(sys.blocks.size());
  for (size_t b = 0; b < sys.blocks.size(); ++b) {
    int s = sys.blocks[b].size();
    out.gram[b] = sol.X[block_ids[b]] +
                  out.t_opt * Eigen::MatrixXd::Identity(s, s);
  }

  // Separating functional: v = -y over the row monomials. Its moment
  // matrix per block is the dual slack S >= 0.
  out.dual.nvars = target.nvars();
  for (size_t r = 0; r < sys.row_monomials.size(); ++r)
    out.dual.values[sys.row_monomials[r]] = -sol.y[row_constraint[r]];
  out.dual_on_support.nvars = target.nvars();
  for (const auto& [m, c] : target.terms())
    out.dual_on_support.values[m] = out.dual.at(m);
  double scale = out.dual_on_support.norm();
  if (scale > 0) {
    for (auto& [m, v] : out.dual.values) v /= scale;
    for (auto& [m, v] : out.dual_on_support.values) v /= scale;
  }
  out.dual_moment.resize(sys.blocks.size());
  for (size_t b = 0; b < sys.blocks.size(); ++b) {
    int s = sys.blocks[b].size();
    Eigen::MatrixXd M(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) M(i, j) = out.dual.at(sys.blocks[b][i] * sys.blocks[b][j]);
    out.dual_moment[b] = M;
  }
  return out;
}

std::vector<MonomialBasis> projection_blocks(const Polynomial& target) {
  if (target.is_zero()) return {};
  int d = *target.degree();
  MonomialBasis basis = monomial_basis(target.nvars(), d / 2, target.is_homogeneous());
  auto groups = single_variable_groups(target.nvars());
  if (!parity_invariant(target, groups)) return {basis};
  auto split = parity_split(basis, groups);
  std::vector<MonomialBasis> out;
  for (auto& b : split)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

SosProjection project_onto_sos(const Polynomial& target, const std::vector<MonomialBasis>& blocks,
                               double tol, int max_iter) {
  SosProjection out;
  // Coefficient space: every within-block product plus the target support.
  GramSystem sys = gram_system(target, blocks);
  const int k = static_cast<int>(sys.row_monomials.size());

  SdpProblem prob;
  std::vector<int> block_ids;
  for (const auto& b : sys.blocks) block_ids.push_back(prob.add_block(b.size()));
  int arrow = prob.add_block(k + 1);

  // Arrow block [[s I, v],[v', s]] >= 0 encodes ||v|| <= s.
  // Off-diagonal zeros:
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      SdpConstraint con;
      con.matrix_terms.push_back({arrow, i, j, 1.0});
      con.rhs = 0.0;
      prob.constraints.push_back(std::move(con));
    }
  // Equal diagonal: Y_ii - Y_kk = 0.
  for (int i = 0; i < k; ++i) {
    SdpConstraint con;
    con.matrix_terms.push_back({arrow, i, i, 1.0});
    con.matrix_terms.push_back({arrow, k, k, -1.0});
    con.rhs = 0.0;
    prob.constraints.push_back(std::move(con));
  }
  // Residual ties: Y_ik + (A vec Q)_i = p_i, so Y_ik = p_i - q_i.
  for (int r = 0; r < k; ++r) {
    SdpConstraint con;
    con.matrix_terms.push_back({arrow, r, k, 0.5});  // symmetric pair counts twice
    for (int v : sys.row_vars[r]) {
      auto [i, j] = sys.entry_of_var(v);
      con.matrix_terms.push_back({block_ids[sys.block_of_var(v)], i, j, 1.0});
    }
    con.rhs = to_double(sys.rhs[r]);
    prob.constraints.push_back(std::move(con));
  }
  prob.objective_matrix.push_back({arrow, k, k, 1.0});  // min s

  SdpSolution sol = solve(prob, tol, max_iter);
  out.status = sol.status;
  out.message = sol.message;
  if (sol.status != SdpStatus::optimal) return out;

  out.distance = sol.X[arrow](k, k);
  out.projection.nvars = target.nvars();
  for (int r = 0; r < k; ++r) {
    double q = 0;
    for (int v : sys.row_vars[r]) {
      auto [i, j] = sys.entry_of_var(v);
      q += (i == j ? 1.0 : 2.0) * sol.X[block_ids[sys.block_of_var(v)]](i, j);
    }
    out.projection.values[sys.row_monomials[r]] = q;
  }
  out.hyperplane.nvars = target.nvars();
  for (int r = 0; r < k; ++r) {
    double residual = out.projection.at(sys.row_monomials[r]) - to_double(sys.rhs[r]);
    if (residual != 0.0) out.hyperplane.values[sys.row_monomials[r]] = residual;
  }
  out.hyperplane.normalize();
  return out;
}

}  // namespace soscert
