#pragma once

#include <vector>

#include "soscert/polynomial.hpp"

namespace soscert {

// Ordered, duplicate-free list of monomials sharing one ambient arity.
// Kept in the canonical order (degree ascending, lex-descending within).
class MonomialBasis {
 public:
  MonomialBasis() : nvars_(0) {}
  explicit MonomialBasis(int nvars) : nvars_(nvars) {}
  MonomialBasis(int nvars, std::vector<Monomial> monomials, bool keep_order = false);

  int nvars() const { return nvars_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  bool empty() const { return monomials_.empty(); }
  const Monomial& operator[](int i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  bool contains(const Monomial& m) const;
  int index_of(const Monomial& m) const;  // -1 when absent

  bool operator==(const MonomialBasis& o) const = default;

 private:
  int nvars_;
  std::vector<Monomial> monomials_;
};

// All monomials of degree <= max_deg (or exactly max_deg when
// homogeneous is set) in the canonical order.
MonomialBasis monomial_basis(int nvars, int max_deg, bool homogeneous);

}  // namespace soscert
