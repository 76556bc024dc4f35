#pragma once

#include "abeltrace/unipoly.hpp"

namespace abeltrace {

// Complete residue sum of (num/den)/F dY over all roots of the monic F,
// taken with multiplicity. Computed as the coefficient of Y^(d-1) in
// num * inverse_mod(den, F) reduced mod F — no root is ever enumerated,
// which is exactly what makes multiple and parameter-dependent roots free.
struct ResidueQuery {
    UniPolyK num;
    UniPolyK den; // coprime to F
    UniPolyK F;   // monic, degree >= 1
};

RatFunc residue_sum(const ResidueQuery& q);
RatFunc residue_sum(const UniPolyK& num, const UniPolyK& den, const UniPolyK& F);
RatFunc residue_sum(const UniPolyK& num, const UniPolyK& F); // den = 1

// H divisible by F iff Res[Y^k H / F] = 0 for k = 0..deg F - 1; both routes
// (residue vanishing, remainder vanishing) are computed and must agree.
bool dual_membership_test(const UniPolyK& h, const UniPolyK& f);

} // namespace abeltrace
