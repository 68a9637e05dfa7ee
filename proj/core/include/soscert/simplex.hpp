#pragma once

#include <vector>

#include "soscert/rational.hpp"

namespace soscert {

// Exact rational feasibility of { lambda >= 0 : sum_i lambda_i * points[i] = q,
// sum_i lambda_i = 1 }, i.e. membership of q in the convex hull of the
// points. Phase-1 simplex with Bland's rule, so it always terminates.
bool in_convex_hull(const std::vector<std::vector<Rational>>& points,
                    const std::vector<Rational>& q);

}  // namespace soscert
