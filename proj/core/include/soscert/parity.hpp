#pragma once

#include "soscert/basis.hpp"

namespace soscert {

// A group of variable indices whose combined degree parity defines one
// coordinate of a monomial's sign-flip signature.
using VariableGroup = std::vector<int>;

// Parity (0/1 per group) of the combined degree of m in each group.
std::vector<int> parity_signature(const Monomial& m, const std::vector<VariableGroup>& groups);

// True when every monomial of p has all-even signature, i.e. p is
// invariant under flipping the signs of any group simultaneously.
bool parity_invariant(const Polynomial& p, const std::vector<VariableGroup>& groups);

// Buckets the basis by signature. The groups must partition the variable
// set. Two monomials can share a Gram block for a sign-invariant target
// only if their product has all-even signature, which holds exactly
// within one bucket. Buckets with a single odd coordinate come first
// (ordered by that coordinate), then buckets with more odd coordinates.
std::vector<MonomialBasis> parity_split(const MonomialBasis& basis,
                                        const std::vector<VariableGroup>& groups);

// Convenience: one singleton group per variable.
std::vector<VariableGroup> single_variable_groups(int nvars);

// For a quadratic-in-y form over [x; y] with n x-variables and m
// y-variables: pairs {x_i, y_i} (only meaningful when m == n).
std::vector<VariableGroup> paired_variable_groups(int n);

}  // namespace soscert
