#include "soscert/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace soscert {

int SdpProblem::add_block(int dim) {
  block_dims.push_back(dim);
  return static_cast<int>(block_dims.size()) - 1;
}

int SdpProblem::add_free() {
  ++num_free;
  objective_free.resize(num_free, 0.0);
  return num_free - 1;
}

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::primal_infeasible: return "primal_infeasible";
    case SdpStatus::dual_infeasible: return "dual_infeasible";
    case SdpStatus::max_iter: return "max_iter";
  }
  return "unknown";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Blocks {
  std::vector<MatrixXd> mats;

  explicit Blocks(const std::vector<int>& dims) {
    mats.reserve(dims.size());
    for (int d : dims) mats.emplace_back(MatrixXd::Zero(d, d));
  }
  Blocks scaled_identity(double v) const {
    Blocks out(*this);
    for (auto& m : out.mats) m = MatrixXd::Identity(m.rows(), m.cols()) * v;
    return out;
  }
};

double inner(const std::vector<MatrixXd>& A, const std::vector<MatrixXd>& B) {
  double s = 0;
  for (size_t b = 0; b < A.size(); ++b) s += (A[b].array() * B[b].array()).sum();
  return s;
}

// <A_i, X> with the symmetric-term convention.
double apply_constraint(const SdpConstraint& con, const std::vector<MatrixXd>& X,
                        const VectorXd& u) {
  double s = 0;
  for (const auto& t : con.matrix_terms)
    s += (t.row == t.col ? 1.0 : 2.0) * t.value * X[t.block](t.row, t.col);
  for (const auto& [idx, v] : con.free_terms) s += v * u(idx);
  return s;
}

void add_scaled_terms(std::vector<MatrixXd>& out, const std::vector<SdpTerm>& terms,
                      double scale) {
  for (const auto& t : terms) {
    out[t.block](t.row, t.col) += scale * t.value;
    if (t.row != t.col) out[t.block](t.col, t.row) += scale * t.value;
  }
}

// Largest alpha in (0, 1] keeping M + alpha*D positive definite, damped.
double max_step(const std::vector<MatrixXd>& M, const std::vector<MatrixXd>& D) {
  double alpha = 1.0;
  for (size_t b = 0; b < M.size(); ++b) {
    if (M[b].rows() == 0) continue;
    Eigen::LLT<MatrixXd> llt(M[b]);
    if (llt.info() != Eigen::Success) return 1e-12;
    MatrixXd L = llt.matrixL();
    MatrixXd W = L.triangularView<Eigen::Lower>().solve(D[b]);
    MatrixXd T = L.triangularView<Eigen::Lower>().solve(W.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(0.5 * (T + T.transpose()),
                                                Eigen::EigenvaluesOnly);
    double lmin = eig.eigenvalues().minCoeff();
    if (lmin < 0) alpha = std::min(alpha, 0.99 / (-lmin));
  }
  return alpha;
}

struct NtScaling {
  std::vector<MatrixXd> W;     // W S W = X
  std::vector<MatrixXd> Sinv;  // S^{-1}
  bool ok = true;
};

NtScaling nt_scaling(const std::vector<MatrixXd>& X, const std::vector<MatrixXd>& S) {
  NtScaling nt;
  nt.W.resize(X.size());
  nt.Sinv.resize(X.size());
  for (size_t b = 0; b < X.size(); ++b) {
    if (X[b].rows() == 0) {
      nt.W[b] = X[b];
      nt.Sinv[b] = X[b];
      continue;
    }
    Eigen::LLT<MatrixXd> lx(X[b]), ls(S[b]);
    if (lx.info() != Eigen::Success || ls.info() != Eigen::Success) {
      nt.ok = false;
      return nt;
    }
    MatrixXd Lx = lx.matrixL();
    MatrixXd Ls = ls.matrixL();
    Eigen::JacobiSVD<MatrixXd> svd(Ls.transpose() * Lx,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
    VectorXd sv = svd.singularValues();
    for (int i = 0; i < sv.size(); ++i) sv(i) = 1.0 / std::sqrt(std::max(sv(i), 1e-300));
    MatrixXd R = Lx * svd.matrixV() * sv.asDiagonal();
    nt.W[b] = R * R.transpose();
    MatrixXd I = MatrixXd::Identity(S[b].rows(), S[b].cols());
    nt.Sinv[b] = ls.solve(I);
  }
  return nt;
}

}  // namespace

SdpSolution solve(const SdpProblem& prob, double tol, int max_iter) {
  const int nb = static_cast<int>(prob.block_dims.size());
  const int m = static_cast<int>(prob.constraints.size());
  const int nf = prob.num_free;
  int total_dim = 0;
  for (int d : prob.block_dims) total_dim += d;
  if (total_dim == 0 && nf == 0) throw std::invalid_argument("empty SDP");

  SdpSolution sol;
  sol.y = VectorXd::Zero(m);
  sol.free_values = VectorXd::Zero(nf);

  VectorXd b(m);
  for (int i = 0; i < m; ++i) b(i) = prob.constraints[i].rhs;
  double bnorm = m ? b.cwiseAbs().maxCoeff() : 0.0;

  std::vector<MatrixXd> C = Blocks(prob.block_dims).mats;
  add_scaled_terms(C, prob.objective_matrix, 1.0);
  double cnorm = 0.0;
  for (const auto& Cb : C) cnorm = std::max(cnorm, Cb.size() ? Cb.cwiseAbs().maxCoeff() : 0.0);
  for (double v : prob.objective_free) cnorm = std::max(cnorm, std::abs(v));

  const double start_scale = 1.0 + std::max(bnorm, cnorm);
  std::vector<MatrixXd> X = Blocks(prob.block_dims).scaled_identity(start_scale).mats;
  std::vector<MatrixXd> S = Blocks(prob.block_dims).scaled_identity(start_scale).mats;
  VectorXd& u = sol.free_values;

  const double big = 1e8 * start_scale;
  auto record = [&](SdpStatus st, const std::string& msg) {
    sol.status = st;
    sol.message = msg;
    sol.X = X;
    sol.S = S;
  };

  int stalls = 0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    sol.iterations = iter;

    // Residuals.
    VectorXd rp(m);
    for (int i = 0; i < m; ++i) rp(i) = b(i) - apply_constraint(prob.constraints[i], X, u);
    std::vector<MatrixXd> Rd = C;
    for (size_t bidx = 0; bidx < Rd.size(); ++bidx) Rd[bidx] -= S[bidx];
    for (int i = 0; i < m; ++i)
      add_scaled_terms(Rd, prob.constraints[i].matrix_terms, -sol.y(i));
    VectorXd rf(nf);
    for (int j = 0; j < nf; ++j) rf(j) = prob.objective_free[j];
    for (int i = 0; i < m; ++i)
      for (const auto& [idx, v] : prob.constraints[i].free_terms) rf(idx) -= v * sol.y(i);

    double mu = total_dim ? inner(X, S) / total_dim : 0.0;
    double rel_p = (m ? rp.cwiseAbs().maxCoeff() : 0.0) / (1.0 + bnorm);
    double rd_norm = 0.0;
    for (const auto& R : Rd) rd_norm = std::max(rd_norm, R.size() ? R.cwiseAbs().maxCoeff() : 0.0);
    if (nf) rd_norm = std::max(rd_norm, rf.cwiseAbs().maxCoeff());
    double rel_d = rd_norm / (1.0 + cnorm);

    sol.primal_objective = inner(C, X);
    for (int j = 0; j < nf; ++j) sol.primal_objective += prob.objective_free[j] * u(j);
    sol.dual_objective = m ? b.dot(sol.y) : 0.0;
    sol.gap = mu;
    sol.primal_residual = rel_p;
    sol.dual_residual = rel_d;

    if (mu <= tol && rel_p <= tol && rel_d <= tol) {
      record(SdpStatus::optimal, "converged");
      return sol;
    }
    // Divergence-based infeasibility certificates.
    if (sol.dual_objective > big && rel_d <= std::sqrt(tol)) {
      record(SdpStatus::primal_infeasible,
             "dual objective diverged along a feasible improving ray");
      return sol;
    }
    if (sol.primal_objective < -big && rel_p <= std::sqrt(tol)) {
      record(SdpStatus::dual_infeasible,
             "primal objective diverged along a feasible improving ray");
      return sol;
    }

    NtScaling nt = nt_scaling(X, S);
    if (!nt.ok) {
      record(SdpStatus::max_iter, "numerical breakdown: iterate left the cone");
      return sol;
    }

    // Schur complement M_ij = <A_i, W A_j W>, bordered by free columns.
    std::vector<std::vector<MatrixXd>> WAW(m);
    for (int i = 0; i < m; ++i) {
      std::vector<MatrixXd> Ai = Blocks(prob.block_dims).mats;
      add_scaled_terms(Ai, prob.constraints[i].matrix_terms, 1.0);
      WAW[i].resize(nb);
      for (int bidx = 0; bidx < nb; ++bidx)
        WAW[i][bidx] = nt.W[bidx] * Ai[bidx] * nt.W[bidx];
    }
    MatrixXd M = MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double s = 0;
        for (const auto& t : prob.constraints[j].matrix_terms)
          s += (t.row == t.col ? 1.0 : 2.0) * t.value * WAW[i][t.block](t.row, t.col);
        M(i, j) = s;
        M(j, i) = s;
      }
    MatrixXd G = MatrixXd::Zero(m, nf);
    for (int i = 0; i < m; ++i)
      for (const auto& [idx, v] : prob.constraints[i].free_terms) G(i, idx) = v;

    double ridge = 1e-12 * (1.0 + M.diagonal().cwiseAbs().maxCoeff());
    Eigen::LDLT<MatrixXd> Mfact(M + ridge * MatrixXd::Identity(m, m));
    if (Mfact.info() != Eigen::Success) {
      record(SdpStatus::max_iter, "numerical breakdown: Schur factorization failed");
      return sol;
    }

    // Saddle solve for [M G; G' 0] [dy; du] = [h; rf].
    auto solve_saddle = [&](const VectorXd& h, const VectorXd& rfree, VectorXd& dy,
                            VectorXd& du) -> bool {
      if (nf == 0) {
        dy = Mfact.solve(h);
        du = VectorXd::Zero(0);
        return true;
      }
      MatrixXd MinvG = Mfact.solve(G);
      VectorXd Minvh = Mfact.solve(h);
      MatrixXd K = G.transpose() * MinvG;
      Eigen::FullPivLU<MatrixXd> Kfact(K);
      if (!Kfact.isInvertible()) return false;
      du = Kfact.solve(G.transpose() * Minvh - rfree);
      dy = Minvh - MinvG * du;
      return true;
    };

    std::vector<MatrixXd> WRdW(nb);
    for (int bidx = 0; bidx < nb; ++bidx) WRdW[bidx] = nt.W[bidx] * Rd[bidx] * nt.W[bidx];

    // One Newton solve for a given complementarity target Rc, from
    //   A(dX) + G du = rp,  A'(dy) + dS = Rd,  G' dy = rf,
    //   dX + W dS W = Rc
    // reduced to the bordered Schur system in (dy, du).
    auto newton_direction = [&](const std::vector<MatrixXd>& Rc, std::vector<MatrixXd>& dX,
                                std::vector<MatrixXd>& dS, VectorXd& dy,
                                VectorXd& du) -> bool {
      VectorXd h(m);
      for (int i = 0; i < m; ++i) {
        double aRc = 0, aWRdW = 0;
        for (const auto& t : prob.constraints[i].matrix_terms) {
          double f = (t.row == t.col ? 1.0 : 2.0) * t.value;
          aRc += f * Rc[t.block](t.row, t.col);
          aWRdW += f * WRdW[t.block](t.row, t.col);
        }
        h(i) = rp(i) - aRc + aWRdW;
      }
      if (!solve_saddle(h, rf, dy, du)) return false;

      dS = Rd;
      for (int i = 0; i < m; ++i)
        add_scaled_terms(dS, prob.constraints[i].matrix_terms, -dy(i));
      dX.assign(nb, MatrixXd());
      for (int bidx = 0; bidx < nb; ++bidx) {
        dX[bidx] = Rc[bidx] - nt.W[bidx] * dS[bidx] * nt.W[bidx];
        dX[bidx] = 0.5 * (dX[bidx] + dX[bidx].transpose()).eval();
      }
      return true;
    };

    // Predictor (affine scaling) direction: Rc = -X.
    std::vector<MatrixXd> Rc(nb);
    for (int bidx = 0; bidx < nb; ++bidx) Rc[bidx] = -X[bidx];
    std::vector<MatrixXd> dX, dS;
    VectorXd dy, du;
    if (!newton_direction(Rc, dX, dS, dy, du)) {
      record(SdpStatus::max_iter, "numerical breakdown: saddle system is singular");
      return sol;
    }
    double ap = max_step(X, dX);
    double ad = max_step(S, dS);

    double mu_aff = 0.0;
    if (total_dim) {
      std::vector<MatrixXd> Xa = X, Sa = S;
      for (int bidx = 0; bidx < nb; ++bidx) {
        Xa[bidx] += ap * dX[bidx];
        Sa[bidx] += ad * dS[bidx];
      }
      mu_aff = inner(Xa, Sa) / total_dim;
    }
    double sigma = mu > 0 ? std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3.0) : 0.0;

    // Corrector: Rc = sigma*mu*S^{-1} - X - sym(dX dS S^{-1}).
    for (int bidx = 0; bidx < nb; ++bidx) {
      MatrixXd T = dX[bidx] * dS[bidx] * nt.Sinv[bidx];
      Rc[bidx] = sigma * mu * nt.Sinv[bidx] - X[bidx] - 0.5 * (T + T.transpose());
    }
    if (!newton_direction(Rc, dX, dS, dy, du)) {
      record(SdpStatus::max_iter, "numerical breakdown: saddle system is singular");
      return sol;
    }
    ap = max_step(X, dX);
    ad = max_step(S, dS);

    if (ap < 1e-10 && ad < 1e-10) {
      if (++stalls >= 2) {
        record(SdpStatus::max_iter, "step length underflow");
        return sol;
      }
    } else {
      stalls = 0;
    }

    for (int bidx = 0; bidx < nb; ++bidx) {
      X[bidx] += ap * dX[bidx];
      S[bidx] += ad * dS[bidx];
      X[bidx] = 0.5 * (X[bidx] + X[bidx].transpose()).eval();
      S[bidx] = 0.5 * (S[bidx] + S[bidx].transpose()).eval();
    }
    sol.y += ad * dy;
    u += ap * du;
  }

  record(SdpStatus::max_iter, "iteration limit reached");
  return sol;
}

}  // namespace soscert
