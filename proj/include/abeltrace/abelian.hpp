#pragma once

#include "abeltrace/reconstruct.hpp"

#include <map>

namespace abeltrace {

// Basis of the maximal-degree abelian forms P/(df/dy) dx on {f = 0}:
// all monomials P = x^alpha y^beta with |alpha| + beta <= d - n - 2,
// dimension C(d-1, n+1). Every generator is certified trace-null and the
// generators' trace-coefficient vectors are certified Q-linearly independent.
struct AbelianBasis {
    MultiPoly f;
    std::vector<MultiPoly> generators;
    long dimension;
};

AbelianBasis abelian_basis(const MultiPoly& f, int n);

// Castelnuovo bound pi_q(d, 2, n) = C(n, q) * C(d+n-q-1, n+1).
long castelnuovo_bound(int d, int n, int q);

long binomial(int n, int k);

// Sorted q-element subset of {1..n}.
using MultiIndex = std::vector<int>;

// Trace coefficients t_{I,k}(b) of a q-form sum h_I dx_I along the vertical
// direction a = 0: t_{I,k} = Res[Y^k h_I(b, Y) dF0/dY / F0] with
// F0 = Pi(V)(Y, 0, b).
std::map<std::pair<MultiIndex, int>, RatFunc> qform_trace_coeffs(
    const MultiPoly& f, int n, int q, const std::map<MultiIndex, MeroFunc>& h, int kmax);

} // namespace abeltrace
