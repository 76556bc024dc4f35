#pragma once

#include "abeltrace/ratfunc.hpp"

#include <vector>

namespace abeltrace {

using RatMatrix = std::vector<std::vector<RatFunc>>;

// Determinant over M. Rows are scaled to polynomial entries first, then
// eliminated fraction-free (Bareiss), so intermediate entries stay polynomial.
RatFunc det_ratfunc(const RatMatrix& m);

struct LinearSolveResult {
    std::vector<RatFunc> x; // empty when det == 0
    RatFunc det;            // determinant of the coefficient matrix
};

// Solves A x = rhs exactly; x is empty iff det == 0.
LinearSolveResult solve_linear(const RatMatrix& a, const std::vector<RatFunc>& rhs);

int rank_ratfunc(const RatMatrix& m);

} // namespace abeltrace
