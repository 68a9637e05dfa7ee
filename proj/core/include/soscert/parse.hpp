#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "soscert/polynomial.hpp"

namespace soscert {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Parses a signed sum of coefficient*monomial terms, e.g.
//   "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1"
// Coefficients are integers or rationals "a/b"; powers use '^'.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& var_names);

// Same grammar, with the variable set collected from the input. Names are
// ordered by (alphabetic stem, numeric suffix), so x1 < x2 < ... < y1 < y2.
Polynomial parse_polynomial_auto(std::string_view text, std::vector<std::string>* names_out = nullptr);

}  // namespace soscert
