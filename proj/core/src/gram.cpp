#include "soscert/gram.hpp"

#include <algorithm>
#include <map>

namespace soscert {

int GramSystem::block_of_var(int v) const {
  for (size_t b = 0; b + 1 < block_offset.size(); ++b)
    if (v < block_offset[b + 1]) return static_cast<int>(b);
  return static_cast<int>(block_offset.size()) - 1;
}

std::pair<int, int> GramSystem::entry_of_var(int v) const {
  int b = block_of_var(v);
  int local = v - block_offset[b];
  int s = blocks[b].size();
  int i = 0;
  while (local >= s - i) {
    local -= s - i;
    ++i;
  }
  return {i, i + local};
}

int GramSystem::var_index(int block, int i, int j) const {
  if (i > j) std::swap(i, j);
  int s = blocks[block].size();
  return block_offset[block] + i * s - i * (i - 1) / 2 + (j - i);
}

int GramSystem::row_of(const Monomial& m) const {
  auto it = std::lower_bound(row_monomials.begin(), row_monomials.end(), m, monomial_less);
  if (it == row_monomials.end() || !(*it == m)) return -1;
  return static_cast<int>(it - row_monomials.begin());
}

GramSystem gram_system(const Polynomial& target, const std::vector<MonomialBasis>& blocks) {
  GramSystem sys;
  sys.nvars = target.nvars();
  sys.blocks = blocks;
  for (const auto& b : blocks)
    if (b.nvars() != target.nvars())
      throw std::invalid_argument("basis arity differs from target arity");

  sys.block_offset.resize(blocks.size());
  int nv = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    sys.block_offset[b] = nv;
    int s = blocks[b].size();
    nv += s * (s + 1) / 2;
  }
  sys.num_vars = nv;

  // Collect row monomials: every within-block product plus the target support.
  std::map<Monomial, int, MonomialLess> rows;
  for (const auto& block : blocks)
    for (int i = 0; i < block.size(); ++i)
      for (int j = i; j < block.size(); ++j) rows.emplace(block[i] * block[j], 0);
  for (const auto& [m, c] : target.terms()) rows.emplace(m, 0);

  sys.row_monomials.reserve(rows.size());
  int r = 0;
  for (auto& [m, idx] : rows) {
    idx = r++;
    sys.row_monomials.push_back(m);
  }
  sys.rhs.assign(rows.size(), Rational(0));
  for (const auto& [m, c] : target.terms()) sys.rhs[rows.at(m)] = c;

  sys.var_row.assign(nv, -1);
  sys.var_coeff.assign(nv, Rational(0));
  sys.row_vars.assign(rows.size(), {});
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    for (int i = 0; i < block.size(); ++i) {
      for (int j = i; j < block.size(); ++j) {
        int v = sys.var_index(static_cast<int>(b), i, j);
        int row = rows.at(block[i] * block[j]);
        sys.var_row[v] = row;
        sys.var_coeff[v] = Rational(i == j ? 1 : 2);
        sys.row_vars[row].push_back(v);
      }
    }
  }

  for (const auto& [m, c] : target.terms()) {
    int row = rows.at(m);
    if (sys.row_vars[row].empty())
      throw UnreachableMonomialError(m, to_string(m, default_var_names(sys.nvars)));
  }
  return sys;
}

Polynomial expand_gram(const GramCertificate& cert) {
  Polynomial out(cert.target.nvars());
  for (const auto& block : cert.blocks) {
    const int s = block.basis.size();
    if (static_cast<int>(block.Q.size()) != s)
      throw std::invalid_argument("Gram matrix dimension differs from basis length");
    if (!is_symmetric(block.Q)) throw std::invalid_argument("Gram matrix is not symmetric");
    if (block.basis.nvars() != cert.target.nvars())
      throw std::invalid_argument("basis arity differs from target arity");
    for (int i = 0; i < s; ++i) {
      for (int j = i; j < s; ++j) {
        const Rational& q = block.Q[i][j];
        if (is_zero(q)) continue;
        out.add_term(block.basis[i] * block.basis[j], i == j ? q : Rational(2) * q);
      }
    }
  }
  return out;
}

VerificationReport verify_certificate(const GramCertificate& cert) {
  VerificationReport rep;
  Polynomial expanded = expand_gram(cert);
  Polynomial claimed =
      sum_of_squares_multiplier(cert.target.nvars(), cert.multiplier_r) * cert.target;

  Polynomial diff = claimed - expanded;
  rep.identity_ok = diff.is_zero();
  if (!rep.identity_ok) {
    const auto& [m, c] = *diff.terms().begin();
    rep.first_mismatch = m;
    rep.expected_coeff = claimed.coeff(m);
    rep.actual_coeff = expanded.coeff(m);
  }

  bool all_psd = true;
  for (const auto& block : cert.blocks) {
    BlockVerification bv{rational_psd_check(block.Q)};
    all_psd = all_psd && bv.ldl.is_psd();
    rep.blocks.push_back(std::move(bv));
  }
  rep.pass = rep.identity_ok && all_psd;
  return rep;
}

std::vector<std::vector<WeightedSquare>> extract_sos_decomposition(const GramCertificate& cert) {
  std::vector<std::vector<WeightedSquare>> out;
  for (const auto& block : cert.blocks) {
    LdlResult ldl = rational_psd_check(block.Q);
    if (!ldl.is_psd())
      throw std::invalid_argument("cannot extract squares: a Gram block is not PSD (" +
                                  ldl.failure + ")");
    const int s = block.basis.size();
    std::vector<WeightedSquare> squares;
    for (int k = 0; k < ldl.rank; ++k) {
      Polynomial g(cert.target.nvars());
      for (int i = 0; i < s; ++i) {
        if (is_zero(ldl.L[i][k])) continue;
        g.add_term(block.basis[ldl.permutation[i]], ldl.L[i][k]);
      }
      squares.push_back({ldl.pivots[k], std::move(g)});
    }
    out.push_back(std::move(squares));
  }
  return out;
}

}  // namespace soscert
