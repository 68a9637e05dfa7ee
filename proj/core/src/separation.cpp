#include "soscert/separation.hpp"

#include <map>

#include "soscert/newton.hpp"

namespace soscert {

RationalMatrix moment_matrix(const std::vector<Rational>& c, const MonomialBasis& subspace,
                             const MonomialBasis& z) {
  if (static_cast<int>(c.size()) != subspace.size())
    throw std::invalid_argument("dual vector length differs from the subspace");
  const int n = z.size();
  RationalMatrix M(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int idx = subspace.index_of(z[i] * z[j]);
      if (idx >= 0) {
        M[i][j] = c[idx];
        M[j][i] = c[idx];
      }
    }
  }
  return M;
}

SeparationReport verify_separation(const SeparationCertificate& cert) {
  SeparationReport rep;

  rep.target_in_subspace = true;
  rep.pairing = 0;
  for (const auto& [m, coeff] : cert.target.terms()) {
    int idx = cert.subspace.index_of(m);
    if (idx < 0) {
      rep.target_in_subspace = false;
      continue;
    }
    rep.pairing += cert.dual[idx] * coeff;
  }
  rep.pairing_negative = sgn(rep.pairing) < 0;

  rep.moment = rational_psd_check(moment_matrix(cert.dual, cert.subspace, cert.pairing_basis));

  // Adequacy: every half-degree monomial whose doubled exponent lies in
  // the convex hull of the subspace exponents must appear in z.
  rep.basis_adequate = true;
  if (!cert.subspace.empty()) {
    Polynomial span_poly(cert.subspace.nvars());
    int dmax = 0;
    bool homogeneous = true;
    int d0 = cert.subspace[0].degree();
    for (const auto& m : cert.subspace.monomials()) {
      span_poly.add_term(m, Rational(1));
      dmax = std::max(dmax, m.degree());
      homogeneous = homogeneous && m.degree() == d0;
    }
    MonomialBasis candidates = monomial_basis(cert.subspace.nvars(), dmax / 2, homogeneous);
    MonomialBasis needed = newton_filter(span_poly, candidates);
    for (const auto& m : needed.monomials()) {
      if (!cert.pairing_basis.contains(m)) {
        rep.basis_adequate = false;
        rep.missing_basis_monomials.push_back(m);
      }
    }
  }

  rep.pass = rep.pairing_negative && rep.target_in_subspace && rep.moment.is_psd() &&
             rep.basis_adequate;
  return rep;
}

std::optional<SeparationCertificate> rationalize_separation(
    const Polynomial& target, const CoeffVector& dual,
    const std::vector<MonomialBasis>& blocks, const Integer& initial_den,
    const Integer& max_den) {
  SeparationCertificate cert;
  cert.target = target;

  std::vector<Monomial> zmonos;
  std::map<Monomial, bool, MonomialLess> sub;
  for (const auto& [m, c] : target.terms()) sub.emplace(m, true);
  for (const auto& block : blocks) {
    for (int i = 0; i < block.size(); ++i) {
      zmonos.push_back(block[i]);
      for (int j = i; j < block.size(); ++j) sub.emplace(block[i] * block[j], true);
    }
  }
  std::vector<Monomial> smonos;
  smonos.reserve(sub.size());
  for (const auto& [m, _] : sub) smonos.push_back(m);
  cert.subspace = MonomialBasis(target.nvars(), std::move(smonos));
  std::sort(zmonos.begin(), zmonos.end(), monomial_less);
  zmonos.erase(std::unique(zmonos.begin(), zmonos.end()), zmonos.end());
  cert.pairing_basis = MonomialBasis(target.nvars(), std::move(zmonos));

  for (Integer den = initial_den; den <= max_den; den *= 32) {
    cert.dual.clear();
    cert.dual.reserve(cert.subspace.size());
    for (const auto& m : cert.subspace.monomials())
      cert.dual.push_back(rational_round(dual.at(m), den));
    if (verify_separation(cert).pass) return cert;
  }
  return std::nullopt;
}

}  // namespace soscert
