#include "soscert/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace soscert {

MonomialBasis::MonomialBasis(int nvars, std::vector<Monomial> monomials, bool keep_order)
    : nvars_(nvars), monomials_(std::move(monomials)) {
  for (const auto& m : monomials_)
    if (m.nvars() != nvars_) throw std::invalid_argument("basis monomial arity mismatch");
  if (!keep_order) std::sort(monomials_.begin(), monomials_.end(), monomial_less);
  for (size_t i = 1; i < monomials_.size(); ++i)
    if (monomials_[i] == monomials_[i - 1])
      throw std::invalid_argument("duplicate monomial in basis");
}

bool MonomialBasis::contains(const Monomial& m) const { return index_of(m) >= 0; }

int MonomialBasis::index_of(const Monomial& m) const {
  for (size_t i = 0; i < monomials_.size(); ++i)
    if (monomials_[i] == m) return static_cast<int>(i);
  return -1;
}

namespace {
void enumerate(int nvars, int var, int remaining, bool exact, Monomial& current,
               std::vector<Monomial>& out) {
  if (var == nvars) {
    if (!exact || remaining == 0) out.push_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[var] = e;
    enumerate(nvars, var + 1, remaining - e, exact, current, out);
  }
  current[var] = 0;
}
}  // namespace

MonomialBasis monomial_basis(int nvars, int max_deg, bool homogeneous) {
  if (nvars <= 0) throw std::invalid_argument("variable count must be positive");
  if (max_deg < 0) throw std::invalid_argument("degree bound must be >= 0");
  std::vector<Monomial> out;
  Monomial current = Monomial::unit(nvars);
  enumerate(nvars, 0, max_deg, homogeneous, current, out);
  return MonomialBasis(nvars, std::move(out));
}

}  // namespace soscert
