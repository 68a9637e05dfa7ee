#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "soscert/basis.hpp"
#include "soscert/ldlt.hpp"
#include "soscert/polynomial.hpp"

namespace soscert {

// One Gram block: an ordered monomial basis z and a symmetric rational
// matrix Q, claiming the contribution z^T Q z.
struct GramBlock {
  MonomialBasis basis;
  RationalMatrix Q;
};

// Claims (sum_i x_i^2)^multiplier_r * target == sum over blocks of z^T Q z
// with every Q positive semidefinite.
struct GramCertificate {
  Polynomial target;
  int multiplier_r = 0;
  std::vector<GramBlock> blocks;
};

// Thrown by gram_system when the target contains a monomial that no
// product of basis elements can produce; such a target is trivially not
// a sum of squares over those bases.
struct UnreachableMonomialError : std::runtime_error {
  Monomial monomial;
  explicit UnreachableMonomialError(Monomial m, const std::string& shown)
      : std::runtime_error("target monomial " + shown + " is unreachable by any basis product"),
        monomial(std::move(m)) {}
};

// The linear system "target == sum z^T Q z" in the upper-triangle Gram
// entries. One row per monomial that appears in the target or in some
// within-block product; each Gram variable contributes to exactly one
// row, with coefficient 1 (diagonal) or 2 (off-diagonal).
struct GramSystem {
  int nvars = 0;
  std::vector<MonomialBasis> blocks;
  std::vector<int> block_offset;  // first variable index of each block
  int num_vars = 0;

  std::vector<Monomial> row_monomials;  // canonical order
  std::vector<Rational> rhs;

  std::vector<int> var_row;          // row hit by each variable
  std::vector<Rational> var_coeff;   // 1 or 2
  std::vector<std::vector<int>> row_vars;

  int block_of_var(int v) const;
  // (i, j) position of variable v inside its block, i <= j.
  std::pair<int, int> entry_of_var(int v) const;
  int var_index(int block, int i, int j) const;
  int row_of(const Monomial& m) const;  // -1 when absent
};

GramSystem gram_system(const Polynomial& target, const std::vector<MonomialBasis>& blocks);

// sum over blocks of z^T Q z, exactly (no multiplier applied).
Polynomial expand_gram(const GramCertificate& cert);

struct BlockVerification {
  LdlResult ldl;
};

struct VerificationReport {
  bool identity_ok = false;
  std::optional<Monomial> first_mismatch;
  Rational expected_coeff, actual_coeff;  // meaningful at the mismatch
  std::vector<BlockVerification> blocks;
  bool pass = false;
};

// Exact check of the certificate: coefficient identity plus a PSD
// verdict for every block.
VerificationReport verify_certificate(const GramCertificate& cert);

// Weighted squares per block: (sum x_i^2)^r * target == sum_k w_k g_k^2,
// obtained from the exact LDL^T factors. Throws when a block is not PSD.
struct WeightedSquare {
  Rational weight;
  Polynomial square_root;  // the g_k above
};
std::vector<std::vector<WeightedSquare>> extract_sos_decomposition(const GramCertificate& cert);

}  // namespace soscert
