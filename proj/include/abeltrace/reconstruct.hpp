#pragma once

#include "abeltrace/linalg.hpp"
#include "abeltrace/trace.hpp"

#include <span>

namespace abeltrace {

// d x d Hankel matrix A[i][j] = s[i+j] with right-hand side s[d..2d-1].
struct HankelSystem {
    RatMatrix A;
    std::vector<RatFunc> rhs;
    RatFunc detA;
};

HankelSystem build_hankel(std::span<const RatFunc> s, int d);

// Solves the moment system (S): the monic F of degree d annihilating the
// power-sum sequence u_0..u_(2d-1). Throws DegenerateHankel when Det A = 0.
UniPolyK solve_S(const TraceData& u);

struct HankelCheckResult {
    RatFunc detA;
    RatFunc disc;
    bool equal;
};

// Both sides of Det A = Disc Q, computed by independent routes (Bareiss on
// the power-sum Hankel matrix vs. Sylvester resultant of Q and dQ/dY).
HankelCheckResult hankel_check(const TraceData& u, const UniPolyK& q);

// Condition (*): F | dF/da_i - Y dF/db_i for every i.
bool star_check(const UniPolyK& f);
// Condition (**): F | dH/da_i - Y dH/db_i for every i.
bool star_star_check(const UniPolyK& h, const UniPolyK& f);

// The semigroup isomorphism Pi and its inverse (specialization a = 0).
UniPolyK pi_map(const Cycle& v);
MultiPoly pi_inverse(const UniPolyK& f);

// The interpolation map rho and its inverse.
UniPolyK rho_map(const Cycle& v, const MeroFunc& h);
MeroFunc rho_inverse(const UniPolyK& f, const UniPolyK& h);

// Wood's criterion: u1 = Tr_V(y) polynomial of total degree <= 1 in the
// b variables (coefficients may depend on a). d is the announced degree of
// the algebraic extension; it does not enter the affineness check.
bool wood_test(const RatFunc& u1, int d);

struct AbelianPair {
    UniPolyK F;
    UniPolyK H;
};

// Abel-inverse pipeline of the trace-form data w_0..w_(2d-1): solves the
// shifted system for F, then the moment system in the xi coefficients for H,
// and validates (*) and (**). Throws DegenerateStildeSystem with a rank
// diagnosis when the w-Hankel matrix is singular.
AbelianPair abel_inverse(std::span<const RatFunc> w, int d, int n);

enum class StildeDegeneracy {
    FormVanishesOnComponent, // gcd(F, H) nonconstant
    VerticalLineComponent,   // gcd(F, dF/dY - sum a_i dF/db_i) nonconstant
    None,
};

// Degeneracy case split, for callers that know the ground-truth pair.
StildeDegeneracy diagnose_stilde_degeneracy(const UniPolyK& f, const UniPolyK& h);

// Shifted shock-wave identities d/da_i seq[k] = d/db_i seq[k+1].
bool shock_check(std::span<const RatFunc> seq, int n);

} // namespace abeltrace
