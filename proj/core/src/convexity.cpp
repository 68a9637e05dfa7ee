#include "soscert/convexity.hpp"

#include "soscert/parity.hpp"

namespace soscert {

HessianValidity is_valid_hessian(const PolyMatrix& P) {
  HessianValidity res;
  const int m = P.dim();
  // A Hessian of an n-variable polynomial is n x n; anything else cannot
  // be a matrix of second derivatives.
  if (m != P.nvars()) {
    res.valid = false;
    return res;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        Polynomial lhs = P.at(i, j).differentiate(k);
        Polynomial rhs = P.at(i, k).differentiate(j);
        if (!(lhs == rhs)) {
          res.valid = false;
          res.i = i;
          res.j = j;
          res.k = k;
          res.lhs = std::move(lhs);
          res.rhs = std::move(rhs);
          return res;
        }
      }
    }
  }
  return res;
}

SosMatrixResult is_sos_matrix(const PolyMatrix& P, int multiplier_r,
                              const SosMatrixOptions& opts) {
  SosMatrixResult res;
  const int n = P.nvars();
  const int m = P.dim();
  Polynomial form = quadratic_form_in_y(P);
  if (multiplier_r > 0) {
    std::vector<int> xmap(n);
    for (int i = 0; i < n; ++i) xmap[i] = i;
    form = form * embed(sum_of_squares_multiplier(n, multiplier_r), n + m, xmap);
  }
  res.form = form;

  // Prefer the paired sign-flip groups {x_i, y_i}; otherwise fall back
  // to plain per-variable flips, or no split at all.
  std::vector<MonomialBasis> blocks;
  if (m == n && parity_invariant(form, paired_variable_groups(n)))
    blocks = sos_blocks(form, paired_variable_groups(n));
  else
    blocks = sos_blocks(form);

  res.feasibility = sos_feasibility(form, blocks, opts.tol, opts.max_iter);
  res.is_sos = res.feasibility.is_sos;

  if (res.is_sos && opts.exact_certificate) {
    std::string why;
    auto rational = rationalize_gram(res.feasibility.gram, res.feasibility.system,
                                     opts.rationalize, &why);
    if (rational) {
      GramCertificate cert;
      cert.target = form;
      cert.multiplier_r = 0;  // the multiplier is already folded into `form`
      for (size_t b = 0; b < res.feasibility.system.blocks.size(); ++b)
        cert.blocks.push_back({res.feasibility.system.blocks[b], (*rational)[b]});
      if (verify_certificate(cert).pass) res.certificate = std::move(cert);
    }
  }
  return res;
}

std::vector<std::pair<std::vector<int>, Polynomial>> principal_minors(
    const PolyMatrix& P, std::optional<int> order) {
  const int m = P.dim();
  std::vector<std::pair<std::vector<int>, Polynomial>> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (order && static_cast<int>(idx.size()) != *order) continue;
    Polynomial d = determinant(principal_submatrix(P, idx));
    out.emplace_back(std::move(idx), std::move(d));
  }
  return out;
}

}  // namespace soscert
