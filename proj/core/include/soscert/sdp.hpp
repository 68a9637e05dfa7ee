#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace soscert {

// Block-diagonal semidefinite program in standard primal form:
//   min  sum_b <C_b, X_b> + c_f' u
//   s.t. sum_b <A_ib, X_b> + g_i' u = b_i      (i = 1..m)
//        X_b >= 0 (PSD), u free.
// Matrices are symmetric; entries are stored once for r <= c and count
// twice in the inner product when off-diagonal.
struct SdpTerm {
  int block;
  int row, col;  // row <= col
  double value;
};

struct SdpConstraint {
  std::vector<SdpTerm> matrix_terms;
  std::vector<std::pair<int, double>> free_terms;
  double rhs = 0.0;
};

struct SdpProblem {
  std::vector<int> block_dims;
  int num_free = 0;
  std::vector<SdpTerm> objective_matrix;
  std::vector<double> objective_free;
  std::vector<SdpConstraint> constraints;

  int add_block(int dim);
  int add_free();
};

enum class SdpStatus { optimal, primal_infeasible, dual_infeasible, max_iter };

std::string to_string(SdpStatus s);

struct SdpSolution {
  SdpStatus status = SdpStatus::max_iter;
  std::vector<Eigen::MatrixXd> X;  // primal blocks
  std::vector<Eigen::MatrixXd> S;  // dual slacks
  Eigen::VectorXd y;               // constraint multipliers
  Eigen::VectorXd free_values;     // primal free variables
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;               // <X,S> / total matrix dimension
  double primal_residual = 0.0;   // normalized
  double dual_residual = 0.0;     // normalized
  int iterations = 0;
  std::string message;
};

// Primal-dual path-following interior point method with Nesterov-Todd
// scaling and a Mehrotra predictor-corrector step, dense Schur
// complement. Deterministic: fixed identity-scaled start, no pivoting
// randomness.
SdpSolution solve(const SdpProblem& prob, double tol = 1e-8, int max_iter = 200);

}  // namespace soscert
