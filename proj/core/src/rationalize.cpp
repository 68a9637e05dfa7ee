#include "soscert/rationalize.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "soscert/linsolve.hpp"

namespace soscert {

namespace {

std::vector<Rational> round_vars(const std::vector<double>& values, const Integer& max_den) {
  std::vector<Rational> out(values.size());
  for (size_t i = 0; i < values.size(); ++i) out[i] = rational_round(values[i], max_den);
  return out;
}

// Projection onto {A q = rhs} is row-separable: every Gram variable
// appears in exactly one row.
void project_rowwise(const GramSystem& sys, std::vector<Rational>& q) {
  for (size_t r = 0; r < sys.row_monomials.size(); ++r) {
    const auto& vars = sys.row_vars[r];
    if (vars.empty()) continue;
    Rational lhs(0), norm(0);
    for (int v : vars) {
      lhs += sys.var_coeff[v] * q[v];
      norm += sys.var_coeff[v] * sys.var_coeff[v];
    }
    Rational delta = sys.rhs[r] - lhs;
    if (sgn(delta) == 0) continue;
    Rational step = delta / norm;
    for (int v : vars) q[v] += sys.var_coeff[v] * step;
  }
}

std::vector<RationalMatrix> assemble_blocks(const GramSystem& sys,
                                            const std::vector<Rational>& q) {
  std::vector<RationalMatrix> blocks;
  blocks.reserve(sys.blocks.size());
  for (size_t b = 0; b < sys.blocks.size(); ++b) {
    int s = sys.blocks[b].size();
    RationalMatrix Q(s, std::vector<Rational>(s, Rational(0)));
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j) {
        const Rational& v = q[sys.var_index(static_cast<int>(b), i, j)];
        Q[i][j] = v;
        Q[j][i] = v;
      }
    blocks.push_back(std::move(Q));
  }
  return blocks;
}

bool all_psd(const std::vector<RationalMatrix>& blocks, std::string* why) {
  for (size_t b = 0; b < blocks.size(); ++b) {
    LdlResult r = rational_psd_check(blocks[b]);
    if (!r.is_psd()) {
      if (why) *why = "block " + std::to_string(b) + ": " + r.failure;
      return false;
    }
  }
  return true;
}

// Near-null eigenvectors of the numeric blocks, normalized by their
// largest entry and rounded to small rationals. These witness the forced
// kernel of every feasible Gram matrix when the target sits on the
// boundary of the cone.
std::vector<std::vector<std::pair<int, std::vector<Rational>>>> kernel_candidates(
    const std::vector<Eigen::MatrixXd>& Q_numeric, double tol) {
  std::vector<std::vector<std::pair<int, std::vector<Rational>>>> K(Q_numeric.size());
  for (size_t b = 0; b < Q_numeric.size(); ++b) {
    const auto& Q = Q_numeric[b];
    if (Q.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Q);
    double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
    for (int k = 0; k < Q.rows(); ++k) {
      if (std::abs(eig.eigenvalues()[k]) > tol * scale) continue;
      Eigen::VectorXd v = eig.eigenvectors().col(k);
      double vmax = v.cwiseAbs().maxCoeff();
      if (vmax == 0.0) continue;
      v /= v(std::max_element(v.data(), v.data() + v.size(),
                              [](double a, double c) { return std::abs(a) < std::abs(c); }) -
            v.data());
      std::vector<Rational> vr(v.size());
      bool ok = true;
      for (int i = 0; i < v.size(); ++i) {
        vr[i] = rational_round(v(i), Integer(64));
        if (std::abs(to_double(vr[i]) - v(i)) > 1e-3) ok = false;
      }
      if (!ok) continue;
      // Validate against the numeric matrix before trusting the guess.
      Eigen::VectorXd vd(v.size());
      for (int i = 0; i < v.size(); ++i) vd(i) = to_double(vr[i]);
      if ((Q * vd).cwiseAbs().maxCoeff() > 1e-3 * scale * vd.cwiseAbs().maxCoeff()) continue;
      K[b].emplace_back(k, std::move(vr));
    }
  }
  return K;
}

}  // namespace

std::optional<std::vector<RationalMatrix>> rationalize_gram(
    const std::vector<Eigen::MatrixXd>& Q_numeric, const GramSystem& sys,
    const RationalizeOptions& opts, std::string* failure_reason) {
  if (Q_numeric.size() != sys.blocks.size())
    throw std::invalid_argument("numeric block count differs from the system");
  for (size_t b = 0; b < sys.blocks.size(); ++b)
    if (Q_numeric[b].rows() != sys.blocks[b].size() || Q_numeric[b].cols() != sys.blocks[b].size())
      throw std::invalid_argument("numeric block dimension differs from its basis");

  // Flatten (symmetrized) numeric entries into the variable vector.
  std::vector<double> qf(sys.num_vars, 0.0);
  for (size_t b = 0; b < sys.blocks.size(); ++b) {
    int s = sys.blocks[b].size();
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j)
        qf[sys.var_index(static_cast<int>(b), i, j)] =
            0.5 * (Q_numeric[b](i, j) + Q_numeric[b](j, i));
  }

  std::string why;
  for (Integer den = opts.initial_denominator; den <= opts.max_denominator; den *= 2) {
    std::vector<Rational> q = round_vars(qf, den);
    project_rowwise(sys, q);
    auto blocks = assemble_blocks(sys, q);
    if (all_psd(blocks, &why)) return blocks;
  }

  if (opts.kernel_stage) {
    auto kernels = kernel_candidates(Q_numeric, opts.kernel_tol);
    bool have_kernel = false;
    for (const auto& kb : kernels) have_kernel = have_kernel || !kb.empty();
    if (have_kernel) {
      // Equality system: the Gram rows plus Q_b v = 0 for every kernel guess.
      std::vector<std::vector<Rational>> A;
      std::vector<Rational> rhs;
      for (size_t r = 0; r < sys.row_monomials.size(); ++r) {
        std::vector<Rational> row(sys.num_vars, Rational(0));
        for (int v : sys.row_vars[r]) row[v] = sys.var_coeff[v];
        A.push_back(std::move(row));
        rhs.push_back(sys.rhs[r]);
      }
      for (size_t b = 0; b < kernels.size(); ++b) {
        int s = sys.blocks[b].size();
        for (const auto& [eigidx, v] : kernels[b]) {
          for (int i = 0; i < s; ++i) {
            std::vector<Rational> row(sys.num_vars, Rational(0));
            for (int j = 0; j < s; ++j) {
              if (sgn(v[j]) == 0) continue;
              row[sys.var_index(static_cast<int>(b), std::min(i, j), std::max(i, j))] += v[j];
            }
            A.push_back(std::move(row));
            rhs.push_back(Rational(0));
          }
        }
      }
      for (Integer den = opts.initial_denominator; den <= opts.max_denominator; den *= 2) {
        std::vector<Rational> q0 = round_vars(qf, den);
        auto projected = project_affine(A, rhs, q0);
        if (!projected) {
          why = "kernel-augmented projection is infeasible";
          break;
        }
        auto blocks = assemble_blocks(sys, *projected);
        if (all_psd(blocks, &why)) return blocks;
      }
    }
  }

  if (failure_reason) *failure_reason = why.empty() ? "no denominator bound succeeded" : why;
  return std::nullopt;
}

}  // namespace soscert
