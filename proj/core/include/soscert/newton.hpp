#pragma once

#include "soscert/basis.hpp"

namespace soscert {

// True when `point` (an exponent vector) lies in the Newton polytope of
// `target`, i.e. the convex hull of its exponent vectors. Exact.
bool in_newton_polytope(const Polynomial& target, const Monomial& point);

// Keeps the monomials m whose doubled exponent vector 2m lies in the
// Newton polytope of the target. Squares outside the polytope can never
// appear in an sos decomposition of the target.
MonomialBasis newton_filter(const Polynomial& target, const MonomialBasis& basis);

}  // namespace soscert
