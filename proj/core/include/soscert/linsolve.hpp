#pragma once

#include <optional>
#include <vector>

#include "soscert/rational.hpp"

namespace soscert {

// Exact dense Gaussian elimination helpers over the rationals.

// Solves M x = rhs for square nonsingular M; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M,
                                                  std::vector<Rational> rhs);

// Reduces [A | b] to row echelon form in place and drops dependent rows.
// Returns false when the system is inconsistent (a zero row with
// nonzero right-hand side).
bool reduce_rows(std::vector<std::vector<Rational>>& A, std::vector<Rational>& b);

// Minimum-norm correction: argmin ||x - x0||_2 subject to A x = b.
// Assumes the system is consistent after row reduction; nullopt when it
// is not. Solved exactly through the KKT system.
std::optional<std::vector<Rational>> project_affine(const std::vector<std::vector<Rational>>& A,
                                                    const std::vector<Rational>& b,
                                                    const std::vector<Rational>& x0);

}  // namespace soscert
